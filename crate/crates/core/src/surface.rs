//! Compact surfaces as invariant bundles.
//!
//! A surface is determined up to homeomorphism by orientability, genus,
//! number of boundary components and number of punctures. Punctures enter
//! the Euler characteristic exactly like boundary components.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("non-orientable surfaces need genus at least 1")]
    ZeroNonOrientableGenus,
    #[error("unrealizable surface: chi={chi}, orientable={orientable}, boundary={boundary}, punctures={punctures}")]
    Unrealizable {
        chi: i64,
        orientable: bool,
        boundary: u32,
        punctures: u32,
    },
    #[error("cannot parse surface literal {0:?} (expected F(g,r[,s]) or N(g,r[,s]))")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Surface {
    pub orientable: bool,
    pub genus: u32,
    pub boundary: u32,
    pub punctures: u32,
}

/// Derived quantities of a [`Surface`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub chi: i64,
    /// Number of pairs of pants in any decomposition; zero when `admits` is false.
    pub pants_count: i64,
    /// Largest possible number of 1-sided curves in a decomposition.
    pub max_crosscaps: u32,
    pub admits: bool,
}

impl Surface {
    pub fn orientable(genus: u32, boundary: u32, punctures: u32) -> Self {
        Surface {
            orientable: true,
            genus,
            boundary,
            punctures,
        }
    }

    pub fn non_orientable(genus: u32, boundary: u32, punctures: u32) -> Result<Self, SurfaceError> {
        if genus == 0 {
            return Err(SurfaceError::ZeroNonOrientableGenus);
        }
        Ok(Surface {
            orientable: false,
            genus,
            boundary,
            punctures,
        })
    }

    pub fn euler_characteristic(&self) -> i64 {
        let holes = self.boundary as i64 + self.punctures as i64;
        if self.orientable {
            2 - 2 * self.genus as i64 - holes
        } else {
            2 - self.genus as i64 - holes
        }
    }

    pub fn invariants(&self) -> Invariants {
        let chi = self.euler_characteristic();
        let admits = chi < 0;
        Invariants {
            chi,
            pants_count: if admits { -chi } else { 0 },
            max_crosscaps: if self.orientable { 0 } else { self.genus },
            admits,
        }
    }

    /// Recovers the genus from the Euler characteristic.
    pub fn classify(chi: i64, orientable: bool, boundary: u32, punctures: u32) -> Result<Self, SurfaceError> {
        let unrealizable = SurfaceError::Unrealizable {
            chi,
            orientable,
            boundary,
            punctures,
        };
        if chi >= 0 {
            return Err(unrealizable);
        }
        let excess = 2 - chi - boundary as i64 - punctures as i64;
        if orientable {
            if excess < 0 || excess % 2 != 0 {
                return Err(unrealizable);
            }
            Ok(Surface::orientable((excess / 2) as u32, boundary, punctures))
        } else {
            if excess < 1 {
                return Err(unrealizable);
            }
            Surface::non_orientable(excess as u32, boundary, punctures)
        }
    }

    /// Subscripted name such as `N_{2,1}` or `F_{0,3}^{1}`.
    pub fn name(&self) -> String {
        let letter = if self.orientable { 'F' } else { 'N' };
        if self.punctures == 0 {
            format!("{letter}_{{{},{}}}", self.genus, self.boundary)
        } else {
            format!("{letter}_{{{},{}}}^{{{}}}", self.genus, self.boundary, self.punctures)
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = if self.orientable { 'F' } else { 'N' };
        if self.punctures == 0 {
            write!(f, "{letter}({},{})", self.genus, self.boundary)
        } else {
            write!(f, "{letter}({},{},{})", self.genus, self.boundary, self.punctures)
        }
    }
}

impl FromStr for Surface {
    type Err = SurfaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || SurfaceError::Parse(s.to_string());
        let t = s.trim();
        let (letter, rest) = t.split_at(t.char_indices().nth(1).map(|(i, _)| i).ok_or_else(err)?);
        let orientable = match letter {
            "F" | "f" => true,
            "N" | "n" => false,
            _ => return Err(err()),
        };
        let inner = rest
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?;
        let nums = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| err())?;
        let (genus, boundary, punctures) = match nums.as_slice() {
            [g, r] => (*g, *r, 0),
            [g, r, p] => (*g, *r, *p),
            _ => return Err(err()),
        };
        if orientable {
            Ok(Surface::orientable(genus, boundary, punctures))
        } else {
            Surface::non_orientable(genus, boundary, punctures)
        }
    }
}
