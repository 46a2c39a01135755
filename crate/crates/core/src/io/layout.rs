//! Deterministic barycentric layout of a plane map.

use crate::plane_map::PlaneMap;

/// Points in the unit square `[-1, 1]^2`.
pub type Point = (f64, f64);

const ITERATIONS: usize = 2000;
const TOLERANCE: f64 = 1e-9;

/// Places the distinct vertices of the largest face on a regular polygon
/// and every other vertex at the average of its neighbours (Gauss-Seidel
/// relaxation). Vertices unreachable from the outer face end up at the
/// centre of their neighbours, or at the origin when isolated.
pub fn barycentric(map: &PlaneMap) -> Vec<Point> {
    let n = map.vertex_count();
    let mut pos = vec![(0.0, 0.0); n];
    let mut fixed = vec![false; n];
    let outer = map.trace_faces().into_iter().max_by_key(|f| f.len());
    let mut ring = Vec::new();
    match outer {
        Some(face) => {
            for v in face.vertices(map) {
                if !ring.contains(&v) {
                    ring.push(v);
                }
            }
        }
        None => ring.extend(0..n),
    }
    let k = ring.len() as f64;
    for (i, &v) in ring.iter().enumerate() {
        let angle = std::f64::consts::TAU * i as f64 / k + std::f64::consts::FRAC_PI_2;
        pos[v] = (angle.cos(), angle.sin());
        fixed[v] = true;
    }
    let neighbours: Vec<Vec<usize>> = (0..n).map(|v| map.neighbors(v)).collect();
    for _ in 0..ITERATIONS {
        let mut moved: f64 = 0.0;
        for v in (0..n).filter(|&v| !fixed[v] && !neighbours[v].is_empty()) {
            let m = neighbours[v].len() as f64;
            let (sx, sy) = neighbours[v]
                .iter()
                .fold((0.0, 0.0), |(sx, sy), &w| (sx + pos[w].0, sy + pos[w].1));
            let next = (sx / m, sy / m);
            moved = moved.max((next.0 - pos[v].0).abs() + (next.1 - pos[v].1).abs());
            pos[v] = next;
        }
        if moved < TOLERANCE {
            break;
        }
    }
    pos
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_hub_sits_in_the_middle() {
        // Wheel with four spokes: rim 0..4, hub 4.
        let mut map = PlaneMap::from_rotations(
            4,
            &[[0, 1], [1, 2], [2, 3], [3, 0]],
            &[vec![0, 7], vec![2, 1], vec![4, 3], vec![6, 5]],
        )
        .unwrap();
        let face = map.trace_faces().swap_remove(0);
        map.insert_vertex_in_face(&face, &[0, 1, 2, 3]).unwrap();
        let pos = barycentric(&map);
        assert!(pos[4].0.abs() < 1e-6 && pos[4].1.abs() < 1e-6);
        for p in &pos[..4] {
            assert!((p.0.hypot(p.1) - 1.0).abs() < 1e-9);
        }
    }
}
