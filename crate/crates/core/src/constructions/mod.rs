//! Generators for the extremal constructions. Every generator returns a
//! certified drawing whose class sizes are exactly the requested `(x, y)`.

mod balanced;
mod families;
pub mod templates;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds;
use crate::drawing::{DrawingError, OnePlanarDrawing};

pub use balanced::{balanced, near_balanced};
pub use families::{b_family, k36_family, planar_family, stacked_triangulation, star, w3_family};
pub use templates::{ConfigTemplate, DeclaredCounts, TemplateName};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("parameters out of range: {0}")]
    Parameters(String),
    #[error("triangulation has {faces} faces but the configuration plan needs {needed}")]
    InsufficientFaces { faces: usize, needed: usize },
    #[error(transparent)]
    Drawing(#[from] DrawingError),
}

pub(crate) fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), ConstructionError> {
    if cond {
        Ok(())
    } else {
        Err(ConstructionError::Parameters(msg()))
    }
}

/// Construction parameters. Only `(x, y)` are stored; everything else is
/// derived on demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub x: usize,
    pub y: usize,
}

impl ConstructionParams {
    pub fn new(x: usize, y: usize) -> Self {
        Self { x, y }
    }

    /// `y = 6r + u` with `0 <= u < 6`.
    pub fn r(&self) -> usize {
        self.y / 6
    }

    pub fn u(&self) -> usize {
        self.y % 6
    }

    /// `y` rounded up to a multiple of 6.
    pub fn y_rounded(&self) -> usize {
        self.y.div_ceil(6) * 6
    }

    /// Vertices of the triangulation used by the B family.
    pub fn triangulation_size(&self) -> usize {
        self.y_rounded() / 6 + 2
    }

    /// `x = y'/6 + 2 + 3s + t` with `t < 3`; `None` when `x` is too small.
    pub fn s_t(&self) -> Option<(usize, usize)> {
        let rest = self.x.checked_sub(self.triangulation_size())?;
        Some((rest / 3, rest % 3))
    }

    /// `x = 2k` or `x = 2k + 1`.
    pub fn k(&self) -> usize {
        self.x / 2
    }

    /// `y - x`, saturating at zero.
    pub fn z(&self) -> usize {
        self.y.saturating_sub(self.x)
    }
}

/// Generator families, listed in tie-breaking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    W3,
    B,
    Balanced,
    NearBalanced,
    K36,
    Star,
    Planar,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::W3,
        Family::B,
        Family::Balanced,
        Family::NearBalanced,
        Family::K36,
        Family::Star,
        Family::Planar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::W3 => "w3",
            Family::B => "b",
            Family::Balanced => "balanced",
            Family::NearBalanced => "near",
            Family::K36 => "k36",
            Family::Star => "star",
            Family::Planar => "planar",
        }
    }

    /// The closed form the family realises.
    pub fn formula(self) -> &'static str {
        match self {
            Family::W3 => "2n+4x-12",
            Family::B => "5n/2+x/2-6 (y=6r), 5n/2+x/2-9+u/2 (y=6r+u)",
            Family::Balanced => "3n-8 (x=3: 3n-9)",
            Family::NearBalanced => "3n-8-z",
            Family::K36 => "2n (y<6: 3y)",
            Family::Star => "y",
            Family::Planar => "2n-4",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A construction together with the family that produced it.
#[derive(Debug, Clone)]
pub struct Construction {
    pub family: Family,
    pub drawing: OnePlanarDrawing,
}

/// Runs one family's generator at `(x, y)`.
pub fn construct(family: Family, x: usize, y: usize) -> Result<OnePlanarDrawing, ConstructionError> {
    match family {
        Family::W3 => w3_family(x, y),
        Family::B => b_family(x, y),
        Family::Balanced => {
            require(x == y, || format!("balanced needs x = y, got ({x}, {y})"))?;
            balanced(x)
        }
        Family::NearBalanced => near_balanced(x, y),
        Family::K36 => {
            require(x == 3, || format!("k36 needs x = 3, got {x}"))?;
            if y < 6 {
                families::k3_small(y)
            } else {
                k36_family(y)
            }
        }
        Family::Star => {
            require(x == 1, || format!("star needs x = 1, got {x}"))?;
            star(y)
        }
        Family::Planar => {
            require(x == 2, || format!("planar needs x = 2, got {x}"))?;
            planar_family(y)
        }
    }
}

/// The largest construction known for `(x, y)`, `1 <= x <= y`. Ties go to
/// the family listed first in [`Family`].
pub fn best_known(x: usize, y: usize) -> Result<Construction, ConstructionError> {
    require(1 <= x && x <= y, || format!("need 1 <= x <= y, got ({x}, {y})"))?;
    let (family, edges) = bounds::best_family(x, y).expect("some family applies whenever 1 <= x <= y");
    let drawing = construct(family, x, y)?;
    debug_assert_eq!(drawing.edge_count() as i64, edges);
    Ok(Construction { family, drawing })
}
