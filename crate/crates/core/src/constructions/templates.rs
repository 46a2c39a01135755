//! Stored, certified drawing fragments.
//!
//! The JSON sources live in `templates/` and are regenerated by the
//! `find_templates` example. Each is parsed and validated once on first use.

use std::sync::OnceLock;

use crate::drawing::OnePlanarDrawing;
use crate::io::load;
use crate::plane_map::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TemplateName {
    W3,
    B0,
    B1,
    B2,
    B3,
    K36,
    BalancedSmall(usize),
}

/// `(inserted black, inserted white, edges, crossings)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeclaredCounts {
    pub inserted_black: usize,
    pub inserted_white: usize,
    pub edges: usize,
    pub crossings: usize,
}

#[derive(Debug, Clone)]
pub struct ConfigTemplate {
    pub name: TemplateName,
    pub fragment: OnePlanarDrawing,
    /// Boundary vertices glued onto a host triangle; empty for closed
    /// templates.
    pub corners: Vec<VertexId>,
    pub declared: DeclaredCounts,
}

const W3_JSON: &str = include_str!("../../templates/w3.json");
const B1_JSON: &str = include_str!("../../templates/b1.json");
const B2_JSON: &str = include_str!("../../templates/b2.json");
const B3_JSON: &str = include_str!("../../templates/b3.json");
const K36_JSON: &str = include_str!("../../templates/k36.json");
const BALANCED3_JSON: &str = include_str!("../../templates/balanced3.json");
const BALANCED5_JSON: &str = include_str!("../../templates/balanced5.json");

fn parse(name: TemplateName, text: &str, corners: &[VertexId], declared: DeclaredCounts) -> ConfigTemplate {
    let fragment = load(text).unwrap_or_else(|e| panic!("stored template {name:?} is invalid: {e}"));
    ConfigTemplate {
        name,
        fragment,
        corners: corners.to_vec(),
        declared,
    }
}

fn counts(inserted_black: usize, inserted_white: usize, edges: usize, crossings: usize) -> DeclaredCounts {
    DeclaredCounts {
        inserted_black,
        inserted_white,
        edges,
        crossings,
    }
}

/// The stored template, or `None` for names without one
/// (`BalancedSmall(x)` exists only for x = 3 and 5).
pub fn template(name: TemplateName) -> Option<&'static ConfigTemplate> {
    static W3: OnceLock<ConfigTemplate> = OnceLock::new();
    static B0: OnceLock<ConfigTemplate> = OnceLock::new();
    static B1: OnceLock<ConfigTemplate> = OnceLock::new();
    static B2: OnceLock<ConfigTemplate> = OnceLock::new();
    static B3: OnceLock<ConfigTemplate> = OnceLock::new();
    static K36: OnceLock<ConfigTemplate> = OnceLock::new();
    static BAL3: OnceLock<ConfigTemplate> = OnceLock::new();
    static BAL5: OnceLock<ConfigTemplate> = OnceLock::new();
    const CORNERS: [VertexId; 3] = [0, 1, 2];
    Some(match name {
        TemplateName::W3 => W3.get_or_init(|| parse(name, W3_JSON, &CORNERS, counts(0, 3, 9, 3))),
        TemplateName::B0 => B0.get_or_init(|| parse(name, W3_JSON, &CORNERS, counts(0, 3, 9, 3))),
        TemplateName::B1 => B1.get_or_init(|| parse(name, B1_JSON, &CORNERS, counts(1, 3, 12, 3))),
        TemplateName::B2 => B2.get_or_init(|| parse(name, B2_JSON, &CORNERS, counts(2, 3, 15, 4))),
        TemplateName::B3 => B3.get_or_init(|| parse(name, B3_JSON, &CORNERS, counts(3, 3, 18, 6))),
        TemplateName::K36 => K36.get_or_init(|| parse(name, K36_JSON, &[], counts(3, 6, 18, 6))),
        TemplateName::BalancedSmall(3) => BAL3.get_or_init(|| parse(name, BALANCED3_JSON, &[], counts(3, 3, 9, 1))),
        TemplateName::BalancedSmall(5) => BAL5.get_or_init(|| parse(name, BALANCED5_JSON, &[], counts(5, 5, 22, 6))),
        TemplateName::BalancedSmall(_) => return None,
    })
}

/// The configuration inserted into a face for `B_i`.
pub fn b_config(i: usize) -> &'static ConfigTemplate {
    let name = match i {
        0 => TemplateName::B0,
        1 => TemplateName::B1,
        2 => TemplateName::B2,
        3 => TemplateName::B3,
        _ => panic!("no configuration B{i}"),
    };
    template(name).expect("stored")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::Side;

    #[test]
    fn declared_counts_match_fragments() {
        let names = [
            TemplateName::W3,
            TemplateName::B0,
            TemplateName::B1,
            TemplateName::B2,
            TemplateName::B3,
            TemplateName::K36,
            TemplateName::BalancedSmall(3),
            TemplateName::BalancedSmall(5),
        ];
        for name in names {
            let t = template(name).unwrap();
            let f = &t.fragment;
            assert!(f.validate().passed(), "{name:?}");
            let (black, white) = f.class_sizes().unwrap();
            let corners = t.corners.len();
            assert_eq!(black - corners, t.declared.inserted_black, "{name:?}");
            assert_eq!(white, t.declared.inserted_white, "{name:?}");
            assert_eq!(f.edge_count(), t.declared.edges, "{name:?}");
            assert_eq!(f.crossing_count(), t.declared.crossings, "{name:?}");
            for &c in &t.corners {
                assert_eq!(f.graph().side(c), Some(Side::Black));
            }
        }
        assert!(template(TemplateName::BalancedSmall(7)).is_none());
    }

    #[test]
    fn inner_blacks_have_degree_three() {
        for i in 0..4 {
            let f = &b_config(i).fragment;
            for v in 6..6 + i {
                let deg = f.graph().edges().iter().filter(|e| e.contains(&v)).count();
                assert_eq!(deg, 3);
            }
        }
    }
}
