//! Cross-checks the gadget planarisation against exhaustive enumeration of
//! rotation systems on the crossing-vertex planarisation.

use oneplanar::oracle::{realize, CrossingAssignment};
use oneplanar::Graph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const ROTATION_LIMIT: u64 = 400_000;

/// Planarised multigraph: true vertices first, then one vertex per pair.
/// The two segments of a crossed edge are consecutive in `ends`.
struct Planarised {
    vertex_count: usize,
    ends: Vec<[usize; 2]>,
}

fn planarise(g: &Graph, pairs: &[[usize; 2]]) -> Planarised {
    let n = g.vertex_count();
    let mut crossing = vec![None; g.edge_count()];
    for (c, &[e, f]) in pairs.iter().enumerate() {
        crossing[e] = Some(c);
        crossing[f] = Some(c);
    }
    let mut ends = Vec::new();
    for (e, &[u, v]) in g.edges().iter().enumerate() {
        match crossing[e] {
            None => ends.push([u, v]),
            Some(c) => {
                ends.push([u, n + c]);
                ends.push([n + c, v]);
            }
        }
    }
    Planarised {
        vertex_count: n + pairs.len(),
        ends,
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

/// Whether some rotation system makes the planarisation planar with every
/// crossing vertex alternating between its two edges.
fn brute_force(g: &Graph, pairs: &[[usize; 2]]) -> Option<bool> {
    let p = planarise(g, pairs);
    let n = g.vertex_count();
    // Dart 2i leaves ends[i][0], dart 2i + 1 leaves ends[i][1].
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); p.vertex_count];
    for (i, &[a, b]) in p.ends.iter().enumerate() {
        at[a].push(2 * i);
        at[b].push(2 * i + 1);
    }
    // Segments of one original edge at a crossing vertex are consecutive
    // in `ends`, so the partner of dart d at z is the one from the other edge.
    let same_edge = |d1: usize, d2: usize| -> bool {
        let (s1, s2) = (d1 / 2, d2 / 2);
        s1.abs_diff(s2) == 1 && p.ends[s1.min(s2)][1] == p.ends[s1.max(s2)][0]
    };
    let mut choices: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut total: u64 = 1;
    for (v, darts) in at.iter().enumerate() {
        let opts: Vec<Vec<usize>> = if darts.len() <= 2 {
            vec![darts.clone()]
        } else {
            permutations(&darts[1..])
                .into_iter()
                .map(|mut rest| {
                    rest.insert(0, darts[0]);
                    rest
                })
                .filter(|rot| v < n || !(0..4).any(|i| same_edge(rot[i], rot[(i + 1) % 4])))
                .collect()
        };
        total = total.saturating_mul(opts.len() as u64);
        choices.push(opts);
    }
    if total > ROTATION_LIMIT {
        return None;
    }
    let dart_count = 2 * p.ends.len();
    let origin = |d: usize| p.ends[d / 2][d % 2];
    let active: Vec<usize> = (0..p.vertex_count).filter(|&v| !at[v].is_empty()).collect();
    let components = {
        let mut parent: Vec<usize> = (0..p.vertex_count).collect();
        fn find(parent: &mut [usize], v: usize) -> usize {
            let mut r = v;
            while parent[r] != r {
                r = parent[r];
            }
            parent[v] = r;
            r
        }
        for &[a, b] in &p.ends {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let mut roots: Vec<usize> = active.iter().map(|&v| find(&mut parent, v)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    };
    let mut index = vec![0usize; p.vertex_count];
    let mut succ = vec![0usize; dart_count];
    loop {
        for v in 0..p.vertex_count {
            let rot = &choices[v][index[v]];
            for i in 0..rot.len() {
                succ[rot[i]] = rot[(i + 1) % rot.len()];
            }
        }
        let mut seen = vec![false; dart_count];
        let mut faces = 0;
        for s in 0..dart_count {
            if !seen[s] {
                faces += 1;
                let mut d = s;
                while !seen[d] {
                    seen[d] = true;
                    d = succ[d ^ 1];
                }
            }
        }
        debug_assert!(active.iter().all(|&v| at[v].iter().all(|&d| origin(d) == v)));
        let euler = active.len() as i64 - p.ends.len() as i64 + faces as i64;
        if euler == 2 * components as i64 {
            return Some(true);
        }
        // Odometer step.
        let mut v = 0;
        loop {
            if v == p.vertex_count {
                return Some(false);
            }
            index[v] += 1;
            if index[v] < choices[v].len() {
                break;
            }
            index[v] = 0;
            v += 1;
        }
    }
}

fn random_graph(rng: &mut StdRng) -> Graph {
    let n = rng.gen_range(4..=7);
    let mut all: Vec<[usize; 2]> = (0..n).flat_map(|a| (a + 1..n).map(move |b| [a, b])).collect();
    all.shuffle(rng);
    let m = rng.gen_range(3..=8.min(all.len()));
    all.truncate(m);
    Graph::new(n, all).unwrap()
}

fn random_pairs(g: &Graph, rng: &mut StdRng) -> Vec<[usize; 2]> {
    let mut free: Vec<usize> = (0..g.edge_count()).collect();
    free.shuffle(rng);
    let want = rng.gen_range(0..=3);
    let mut pairs = Vec::new();
    while pairs.len() < want {
        let Some(e) = free.pop() else { break };
        if let Some(pos) = free.iter().position(|&f| !g.adjacent_edges(e, f)) {
            let f = free.remove(pos);
            pairs.push([e.min(f), e.max(f)]);
        }
    }
    pairs
}

fn agree(g: &Graph, pairs: &[[usize; 2]]) -> bool {
    let Some(expected) = brute_force(g, pairs) else {
        return false;
    };
    let assignment = CrossingAssignment::new(g, pairs).unwrap();
    let got = realize(g, &assignment).unwrap();
    assert_eq!(got.is_some(), expected, "graph {:?}, pairs {pairs:?}", g.edges());
    if let Some(d) = got {
        assert!(d.validate().passed());
        assert_eq!(d.crossing_count(), pairs.len());
    }
    true
}

#[test]
fn random_small_graphs_agree() {
    let mut rng = StdRng::seed_from_u64(0x1a2b);
    let mut checked = 0;
    let mut feasible = 0;
    for _ in 0..400 {
        let g = random_graph(&mut rng);
        let pairs = random_pairs(&g, &mut rng);
        if agree(&g, &pairs) {
            checked += 1;
            if brute_force(&g, &pairs) == Some(true) {
                feasible += 1;
            }
        }
    }
    assert!(checked >= 300, "only {checked} cases within the enumeration limit");
    assert!(feasible > 0 && feasible < checked, "{feasible} of {checked} feasible");
}

#[test]
fn known_graphs_agree() {
    // K4 with its two disjoint edge pairs crossed: the bowtie drawings.
    let k4 = Graph::complete(4);
    for pairs in [vec![], vec![[0, 5]], vec![[0, 5], [1, 4]], vec![[0, 5], [1, 4], [2, 3]]] {
        assert!(agree(&k4, &pairs));
    }
    // K3,3 needs exactly one crossing.
    let k33 = Graph::complete_bipartite(3, 3);
    assert!(agree(&k33, &[]));
    let g = k33.edges();
    let pair = (0..9)
        .flat_map(|e| (e + 1..9).map(move |f| [e, f]))
        .find(|&[e, f]| g[e].iter().all(|v| !g[f].contains(v)))
        .unwrap();
    assert!(agree(&k33, &[pair]));
    // C4 with opposite sides crossed.
    let c4 = Graph::cycle(4);
    assert!(agree(&c4, &[[0, 2]]));
}
