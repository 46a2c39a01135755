//! Closed-form edge bounds for bipartite 1-planar graphs with classes
//! `x <= y`, regime classification, and conjecture-gap reporting.
//!
//! All quantities are exact integers; the one non-integral guarantee is
//! evaluated with rationals and rounded up.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{ConstructionParams, Family};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("class sizes must satisfy 1 <= x <= y, got ({x}, {y})")]
    Domain { x: usize, y: usize },
    #[error("({x}, {y}) is outside the conjecture regime x >= 3, y >= 6x - 12")]
    OutsideConjectureRegime { x: usize, y: usize },
}

fn check(x: usize, y: usize) -> Result<(), BoundsError> {
    if 1 <= x && x <= y {
        Ok(())
    } else {
        Err(BoundsError::Domain { x, y })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// `x <= 2`: every such graph is planar.
    Planar,
    /// `x = 3`, where `2n` is attained.
    X3,
    /// `y >= 6x - 12`.
    Unbalanced,
    /// `x <= y <= 6x - 12` with the `B` construction best.
    Intermediate,
    /// `x <= y <= 6x - 12` with the augmented balanced construction best.
    BalancedAugmented,
}

/// Upper bounds, constructive lower bound and regime for one `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeBounds {
    pub x: usize,
    pub y: usize,
    pub n: usize,
    /// `3n - 8` for even `n != 6`, else `3n - 9` (only for `n >= 4`).
    pub upper_general: Option<i64>,
    /// `2n + 6x - 16` for `x >= 2`.
    pub upper_unbalanced: Option<i64>,
    /// `2n` for `x = 3`.
    pub upper_x3: Option<i64>,
    pub upper_final: i64,
    pub lower_constructive: i64,
    pub lower_family: Family,
    pub regime: Regime,
    /// `2n + 4x - 12` when `x >= 3` and `y >= 6x - 12`.
    pub conjecture_bound: Option<i64>,
}

impl SizeBounds {
    pub fn new(x: usize, y: usize) -> Result<Self, BoundsError> {
        check(x, y)?;
        let n = x + y;
        let (lower_family, lower_constructive) = best_family(x, y).expect("domain checked");
        let regime = if x <= 2 {
            Regime::Planar
        } else if x == 3 {
            Regime::X3
        } else if y + 12 >= 6 * x {
            Regime::Unbalanced
        } else if lower_family == Family::B {
            Regime::Intermediate
        } else {
            Regime::BalancedAugmented
        };
        Ok(Self {
            x,
            y,
            n,
            upper_general: general_upper(n),
            upper_unbalanced: (x >= 2).then(|| 2 * n as i64 + 6 * x as i64 - 16),
            upper_x3: (x == 3).then(|| 2 * n as i64),
            upper_final: upper_bound(x, y)?,
            lower_constructive,
            lower_family,
            regime,
            conjecture_bound: conjecture_bound(x, y),
        })
    }

    pub fn gap(&self) -> i64 {
        self.upper_final - self.lower_constructive
    }

    pub const CSV_HEADER: &'static str =
        "x,y,n,upper_general,upper_unbalanced,upper_x3,upper_final,lower_constructive,lower_family,regime,conjecture_bound";

    pub fn csv_row(&self) -> String {
        let opt = |v: Option<i64>| v.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.x,
            self.y,
            self.n,
            opt(self.upper_general),
            opt(self.upper_unbalanced),
            opt(self.upper_x3),
            self.upper_final,
            self.lower_constructive,
            self.lower_family,
            serde_json::to_value(self.regime)
                .expect("regime")
                .as_str()
                .expect("string"),
            opt(self.conjecture_bound),
        )
    }
}

fn general_upper(n: usize) -> Option<i64> {
    let n = n as i64;
    (n >= 4).then(|| if n % 2 == 0 && n != 6 { 3 * n - 8 } else { 3 * n - 9 })
}

fn conjecture_bound(x: usize, y: usize) -> Option<i64> {
    (x >= 3 && y + 12 >= 6 * x).then(|| 2 * (x + y) as i64 + 4 * x as i64 - 12)
}

/// The smallest applicable upper bound.
pub fn upper_bound(x: usize, y: usize) -> Result<i64, BoundsError> {
    check(x, y)?;
    let n = (x + y) as i64;
    let (xi, yi) = (x as i64, y as i64);
    let mut best = xi * yi;
    let mut take = |v: i64| best = best.min(v);
    if let Some(v) = general_upper(x + y) {
        take(v);
    }
    if x >= 2 {
        take(2 * n + 6 * xi - 16);
    }
    match x {
        1 => take(yi),
        2 if n >= 3 => take(2 * n - 4),
        3 => take(2 * n),
        _ => {}
    }
    Ok(best)
}

/// Whether the `B` construction has enough faces at `(x, y)`.
pub fn b_family_applies(x: usize, y: usize) -> bool {
    if x < 3 || y < x.max(6) || y + 12 > 6 * x {
        return false;
    }
    let p = ConstructionParams::new(x, y);
    let Some((s, t)) = p.s_t() else {
        return false;
    };
    let faces = 2 * p.triangulation_size() - 4;
    let needed = s + usize::from(t > 0) + if p.u() > 0 { 2 } else { 0 };
    needed <= faces
}

/// Edges of the `B` construction: `3(x + y - (y/6 + 2))` when `6 | y`, else
/// `3x + 15r + 3u - 9` with `y = 6r + u`.
pub fn b_family_edges(x: usize, y: usize) -> i64 {
    let p = ConstructionParams::new(x, y);
    let (x, r, u) = (x as i64, p.r() as i64, p.u() as i64);
    if u == 0 {
        3 * (x + y as i64 - (r + 2))
    } else {
        3 * x + 15 * r + 3 * u - 9
    }
}

/// `ceil(5(x + y)/2 + x/2 - 17/2)`, the guaranteed size in the `B` range.
pub fn b_family_guarantee(x: usize, y: usize) -> i64 {
    let (x, y) = (x as i64, y as i64);
    let v = Ratio::new(5, 2) * Ratio::from_integer(x + y) + Ratio::new(x, 2) - Ratio::new(17, 2);
    v.ceil().to_integer()
}

/// Every family that applies at `(x, y)` with its exact edge count, in
/// tie-breaking order.
pub fn candidates(x: usize, y: usize) -> Vec<(Family, i64)> {
    let mut out = Vec::new();
    if x == 0 || y < x {
        return out;
    }
    let (xi, yi, n) = (x as i64, y as i64, (x + y) as i64);
    if x >= 3 && y + 12 >= 6 * x {
        out.push((Family::W3, 2 * n + 4 * xi - 12));
    }
    if b_family_applies(x, y) {
        out.push((Family::B, b_family_edges(x, y)));
    }
    if x == y && x >= 2 {
        out.push((Family::Balanced, if x == 3 { 9 } else { 6 * xi - 8 }));
    }
    if x >= 4 {
        out.push((Family::NearBalanced, 3 * n - 8 - (yi - xi)));
    }
    if x == 3 {
        out.push((Family::K36, if y >= 6 { 2 * n } else { 3 * yi }));
    }
    if x == 1 {
        out.push((Family::Star, yi));
    }
    if x == 2 {
        out.push((Family::Planar, 2 * yi));
    }
    out
}

/// The first family with the largest edge count.
pub fn best_family(x: usize, y: usize) -> Option<(Family, i64)> {
    candidates(x, y).into_iter().fold(None, |best, c| match best {
        Some((_, e)) if e >= c.1 => best,
        _ => Some(c),
    })
}

/// The largest edge count realised by a construction.
pub fn lower_bound(x: usize, y: usize) -> Result<i64, BoundsError> {
    check(x, y)?;
    Ok(best_family(x, y).expect("every (x, y) with 1 <= x <= y has a family").1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureGap {
    pub x: usize,
    pub y: usize,
    pub conjectured_upper: i64,
    pub proven_upper: i64,
    pub constructive_lower: i64,
    /// `[constructive_lower, proven_upper]`; a single point when tight.
    pub open_interval: [i64; 2],
    /// The proven bounds meet, so the exact maximum is known.
    pub tight: bool,
    /// The construction reaches the conjectured maximum.
    pub conjecture_met: bool,
}

/// Conjecture report for `x >= 3`, `y >= 6x - 12`.
pub fn conjecture_gap(x: usize, y: usize) -> Result<ConjectureGap, BoundsError> {
    check(x, y)?;
    let conjectured_upper = conjecture_bound(x, y).ok_or(BoundsError::OutsideConjectureRegime { x, y })?;
    let proven_upper = upper_bound(x, y)?;
    let constructive_lower = lower_bound(x, y)?;
    Ok(ConjectureGap {
        x,
        y,
        conjectured_upper,
        proven_upper,
        constructive_lower,
        open_interval: [constructive_lower, proven_upper],
        tight: constructive_lower == proven_upper,
        conjecture_met: constructive_lower == conjectured_upper,
    })
}

/// How `x` depends on `y` in a ratio table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum XRule {
    Fixed(usize),
    /// `x = floor(alpha * y)`.
    Linear(f64),
    /// `x = floor(sqrt(y))`.
    Sqrt,
}

impl XRule {
    pub fn x_for(self, y: usize) -> usize {
        match self {
            XRule::Fixed(x) => x,
            XRule::Linear(alpha) => (alpha * y as f64).floor() as usize,
            XRule::Sqrt => y.isqrt(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioRow {
    pub x: usize,
    pub y: usize,
    pub n: usize,
    pub lower: i64,
    pub upper: i64,
    pub lower_ratio: f64,
    pub upper_ratio: f64,
}

/// `lower / n` and `upper / n` for each `y`; values of `y` where the rule
/// gives `x` outside `1..=y` are skipped.
pub fn ratio_table(rule: XRule, ys: impl IntoIterator<Item = usize>) -> Vec<RatioRow> {
    ys.into_iter()
        .filter_map(|y| {
            let x = rule.x_for(y);
            let lower = lower_bound(x, y).ok()?;
            let upper = upper_bound(x, y).ok()?;
            let n = x + y;
            Some(RatioRow {
                x,
                y,
                n,
                lower,
                upper,
                lower_ratio: lower as f64 / n as f64,
                upper_ratio: upper as f64 / n as f64,
            })
        })
        .collect()
}

/// Bounds for every `1 <= x <= xmax`, `x <= y <= ymax`, row-major in `x`.
pub fn table(xmax: usize, ymax: usize) -> Vec<SizeBounds> {
    (1..=xmax)
        .flat_map(|x| (x..=ymax).map(move |y| SizeBounds::new(x, y).expect("in domain")))
        .collect()
}

/// Conjecture reports for `3 <= x <= xmax`, `max(x, 6x - 12) <= y <= ymax`.
pub fn conjecture_table(xmax: usize, ymax: usize) -> Vec<ConjectureGap> {
    (3..=xmax)
        .flat_map(|x| ((6 * x).saturating_sub(12).max(x)..=ymax).map(move |y| conjecture_gap(x, y).expect("in regime")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upper_examples() {
        assert_eq!(upper_bound(5, 5), Ok(22));
        assert_eq!(upper_bound(3, 7), Ok(20));
        assert_eq!(upper_bound(3, 3), Ok(9));
        assert_eq!(upper_bound(2, 8), Ok(16));
        assert_eq!(upper_bound(1, 1), Ok(1));
        assert_eq!(upper_bound(2, 2), Ok(4));
        assert!(upper_bound(0, 3).is_err());
        assert!(upper_bound(4, 3).is_err());
    }

    #[test]
    fn lower_examples() {
        assert_eq!(lower_bound(3, 6), Ok(18));
        assert_eq!(lower_bound(10, 12), Ok(56));
        assert_eq!(lower_bound(4, 12), Ok(36));
        assert_eq!(lower_bound(1, 9), Ok(9));
        assert_eq!(best_family(3, 30), Some((Family::W3, 66)));
        assert_eq!(best_family(11, 11), Some((Family::Balanced, 58)));
        assert_eq!(best_family(1, 9), Some((Family::Star, 9)));
        assert!(!b_family_applies(11, 11));
    }

    #[test]
    fn b_edges_against_guarantee() {
        assert_eq!(b_family_edges(5, 12), 39);
        assert_eq!(b_family_edges(4, 7), 21);
        for x in 3..=20 {
            for y in x.max(6)..=6 * x - 12 {
                assert!(b_family_edges(x, y) >= b_family_guarantee(x, y), "({x}, {y})");
            }
        }
        assert_eq!(b_family_guarantee(5, 12), 37);
    }

    #[test]
    fn grid_consistency() {
        for x in 1..=120 {
            let mut last = None;
            for y in x..=300 {
                let (l, u) = (lower_bound(x, y).unwrap(), upper_bound(x, y).unwrap());
                assert!(l <= u, "({x}, {y}): {l} > {u}");
                assert!(u <= (x * y) as i64);
                if let Some(prev) = last {
                    assert!(u >= prev, "upper decreases at ({x}, {y})");
                }
                last = Some(u);
            }
        }
        for y in 6..=300 {
            let b = SizeBounds::new(3, y).unwrap();
            assert_eq!(b.lower_constructive, b.upper_final);
            assert_eq!(b.upper_final, 2 * (3 + y) as i64);
        }
    }

    #[test]
    fn conjecture_examples() {
        let g = conjecture_gap(3, 6).unwrap();
        assert!(g.tight && g.conjecture_met);
        assert_eq!(g.constructive_lower, 18);
        let g = conjecture_gap(4, 12).unwrap();
        assert_eq!(
            (g.constructive_lower, g.conjectured_upper, g.proven_upper),
            (36, 36, 40)
        );
        assert!(!g.tight && g.conjecture_met);
        assert_eq!(g.open_interval, [36, 40]);
        let g = conjecture_gap(3, 100).unwrap();
        assert!(g.tight);
        assert_eq!(g.proven_upper, 206);
        assert!(conjecture_gap(4, 11).is_err());
    }

    #[test]
    fn ratio_rules() {
        for row in ratio_table(XRule::Fixed(3), 6..200) {
            assert_eq!(row.lower_ratio, 2.0);
            assert_eq!(row.upper_ratio, 2.0);
        }
        let rows = ratio_table(XRule::Sqrt, [100, 10_000]);
        let last = rows.last().unwrap();
        assert_eq!((last.x, last.n, last.upper), (100, 10_100, 20_784));
        assert!(rows[0].upper_ratio > last.upper_ratio && last.upper_ratio < 2.06);
        for row in ratio_table(XRule::Linear(0.1), (100..=2000).step_by(100)) {
            assert!(row.upper_ratio > 2.35, "{row:?}");
        }
    }

    #[test]
    fn regimes() {
        assert_eq!(SizeBounds::new(2, 9).unwrap().regime, Regime::Planar);
        assert_eq!(SizeBounds::new(3, 9).unwrap().regime, Regime::X3);
        assert_eq!(SizeBounds::new(5, 18).unwrap().regime, Regime::Unbalanced);
        assert_eq!(SizeBounds::new(11, 11).unwrap().regime, Regime::BalancedAugmented);
        assert_eq!(SizeBounds::new(10, 40).unwrap().regime, Regime::Intermediate);
    }
}
