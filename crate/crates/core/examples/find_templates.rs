//! Regenerates the stored construction templates in `templates/`.
//!
//! Fragment templates are realised from a fixed crossing assignment on the
//! fragment plus a scaffold (corner triangle and an apex joined to all three
//! corners), which pins the fragment inside the corner triangle. Closed
//! templates come straight from the oracle.
//!
//! ```text
//! cargo run --release --example find_templates -- [OUT_DIR] [--search-seconds S]
//! ```

use std::path::{Path, PathBuf};
use std::time::Duration;

use oneplanar::io::{save, Provenance};
use oneplanar::oracle::{self, CrossingAssignment, OracleVerdict, SearchOptions};
use oneplanar::{Graph, OnePlanarDrawing, Side};

const CORNER_EDGES: [[usize; 2]; 9] = [[3, 0], [3, 1], [3, 2], [4, 0], [4, 1], [4, 2], [5, 0], [5, 1], [5, 2]];
const CORNER_PAIRS: [[usize; 2]; 3] = [[1, 3], [2, 6], [5, 7]];

/// Corners 0..3 and inner blacks from 6 are black; whites are 3, 4, 5.
fn fragment(inner_blacks: usize, pairs: &[[usize; 2]]) -> OnePlanarDrawing {
    let mut edges: Vec<[usize; 2]> = CORNER_EDGES.to_vec();
    for w in 3..6 {
        for b in 0..inner_blacks {
            edges.push([w, 6 + b]);
        }
    }
    let f = edges.len();
    let apex = 6 + inner_blacks;
    edges.extend([[0, 1], [1, 2], [2, 0], [0, apex], [1, apex], [2, apex]]);
    let g = Graph::new(apex + 1, edges).expect("scaffolded fragment is simple");
    let assignment = CrossingAssignment::new(&g, pairs).expect("valid pairs");
    let d = oracle::realize(&g, &assignment)
        .expect("realisation certifies")
        .expect("assignment admits a drawing");
    let d = d.remove_vertices(&[apex]).expect("apex removal");
    let d = d.remove_edges(&[f, f + 1, f + 2]).expect("scaffold removal");
    let sides: Vec<Side> = (0..apex)
        .map(|v| if (3..6).contains(&v) { Side::White } else { Side::Black })
        .collect();
    d.recoloured(Some(&sides)).expect("fragment is bipartite")
}

fn search(graph: &Graph, budget: usize, seconds: u64) -> Option<OnePlanarDrawing> {
    let opts = SearchOptions {
        timeout: Some(Duration::from_secs(seconds)),
        resume: None,
    };
    match oracle::is_one_planar_with(graph, budget, &opts) {
        OracleVerdict::Yes(d) => Some(d),
        OracleVerdict::No => None,
        OracleVerdict::Unknown(cp) => {
            eprintln!(
                "  search interrupted at level {} after {} branches",
                cp.level, cp.completed
            );
            None
        }
    }
}

/// K5,5 minus three edges, for every removal shape up to symmetry.
fn balanced5(seconds: u64) -> Option<OnePlanarDrawing> {
    let shapes: [(&str, [[usize; 2]; 3]); 4] = [
        ("matching", [[0, 5], [1, 6], [2, 7]]),
        ("path-and-edge", [[0, 5], [0, 6], [1, 7]]),
        ("path", [[0, 5], [0, 6], [1, 6]]),
        ("star", [[0, 5], [0, 6], [0, 7]]),
    ];
    for (name, removed) in shapes {
        let sides: Vec<Side> = (0..10).map(|v| if v < 5 { Side::Black } else { Side::White }).collect();
        let edges: Vec<[usize; 2]> = (0..5)
            .flat_map(|b| (5..10).map(move |w| [b, w]))
            .filter(|e| !removed.contains(e))
            .collect();
        let g = Graph::bipartite(sides, edges).expect("bipartite");
        eprintln!("balanced-5: trying {name}");
        if let Some(d) = search(&g, 8, seconds) {
            return Some(d);
        }
    }
    None
}

fn write(dir: &Path, name: &str, d: &OnePlanarDrawing) {
    assert!(d.validate().passed(), "{name} failed validation");
    let prov = Provenance {
        generator: format!("template:{name}"),
        parameters: Default::default(),
    };
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, save(d, Some(prov)) + "\n").expect("write template");
    eprintln!(
        "{name}: {} vertices, {} edges, {} crossings -> {}",
        d.vertex_count(),
        d.edge_count(),
        d.crossing_count(),
        path.display()
    );
}

fn main() {
    let mut args = std::env::args().skip(1);
    let mut dir = PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/templates"));
    let mut seconds = 600;
    while let Some(a) = args.next() {
        if a == "--search-seconds" {
            seconds = args.next().and_then(|s| s.parse().ok()).expect("seconds");
        } else {
            dir = PathBuf::from(a);
        }
    }
    std::fs::create_dir_all(&dir).expect("output directory");

    let w3 = fragment(0, &CORNER_PAIRS);
    write(&dir, "w3", &w3);
    let b1: Vec<[usize; 2]> = CORNER_PAIRS.to_vec();
    write(&dir, "b1", &fragment(1, &b1));
    let mut b2 = CORNER_PAIRS.to_vec();
    b2.push([12, 13]);
    write(&dir, "b2", &fragment(2, &b2));
    let mut b3 = CORNER_PAIRS.to_vec();
    b3.extend([[10, 12], [11, 15], [14, 16]]);
    let b3 = fragment(3, &b3);
    write(&dir, "b3", &b3);

    // K3,6: the B3 fragment with the classes swapped.
    let sides: Vec<Side> = (0..9)
        .map(|v| if (3..6).contains(&v) { Side::Black } else { Side::White })
        .collect();
    write(&dir, "k36", &b3.recoloured(Some(&sides)).expect("recolour"));

    let k33 = Graph::complete_bipartite(3, 3);
    let d = search(&k33, 1, seconds).expect("K3,3 has one crossing");
    write(&dir, "balanced3", &d);

    match balanced5(seconds) {
        Some(d) => write(&dir, "balanced5", &d),
        None => eprintln!("balanced-5: no drawing found within the time limit"),
    }
}
