//! Defect thresholds as functions of the Euler genus `g`, with the quadratic
//! identities they satisfy.

use std::fmt;
use std::str::FromStr;

use super::ColoringError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `9g - 4` for `(0,0,0,K)` and `(2,2,K)`.
    Linear,
    /// `38 + sqrt(84g + 1682)` for `(2,K,K)`.
    TwoKK,
    /// `20 + sqrt(48g + 481)` for `(0,0,K,K)`.
    ZeroZeroKK,
    /// `ceil((10g + 32) / 3)` for `(0,K)` on triangle-free graphs.
    TriangleFree,
    /// `5 + ceil(sqrt(14g + 22))` for `(0,K)` on graphs of girth 7.
    Girth7,
}

impl Family {
    pub const ALL: [Family; 5] =
        [Family::Linear, Family::TwoKK, Family::ZeroZeroKK, Family::TriangleFree, Family::Girth7];

    pub fn name(self) -> &'static str {
        match self {
            Family::Linear => "linear",
            Family::TwoKK => "twokk",
            Family::ZeroZeroKK => "zerozerokk",
            Family::TriangleFree => "trianglefree",
            Family::Girth7 => "girth7",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = ColoringError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| ColoringError::Precondition(format!("unknown threshold family `{s}`")))
    }
}

/// `a + b * sqrt(r)` with integer parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadraticSurd {
    pub rational: i128,
    pub coefficient: i128,
    pub radicand: i128,
}

impl QuadraticSurd {
    pub fn to_f64(self) -> f64 {
        self.rational as f64 + self.coefficient as f64 * (self.radicand as f64).sqrt()
    }

    fn mul(self, other: QuadraticSurd) -> QuadraticSurd {
        debug_assert_eq!(self.radicand, other.radicand);
        QuadraticSurd {
            rational: self.rational * other.rational + self.coefficient * other.coefficient * self.radicand,
            coefficient: self.rational * other.coefficient + self.coefficient * other.rational,
            radicand: self.radicand,
        }
    }

    fn add(self, other: QuadraticSurd) -> QuadraticSurd {
        QuadraticSurd {
            rational: self.rational + other.rational,
            coefficient: self.coefficient + other.coefficient,
            radicand: self.radicand,
        }
    }

    fn scale_add(self, factor: i128, constant: i128) -> QuadraticSurd {
        QuadraticSurd {
            rational: self.rational * factor + constant,
            coefficient: self.coefficient * factor,
            radicand: self.radicand,
        }
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coefficient {
            0 => write!(f, "{}", self.rational),
            1 => write!(f, "{}+sqrt({})", self.rational, self.radicand),
            c => write!(f, "{}+{}*sqrt({})", self.rational, c, self.radicand),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Threshold {
    pub family: Family,
    pub genus: u64,
    /// Exact value (integer families have coefficient 0).
    pub exact: QuadraticSurd,
    pub value: f64,
    /// Largest integer not above the value; the usable integer defect.
    pub integer: u64,
}

fn ceil_sqrt(x: u64) -> u64 {
    let s = x.isqrt();
    if s * s == x {
        s
    } else {
        s + 1
    }
}

fn floor_surd(a: u64, r: u64) -> u64 {
    a + r.isqrt()
}

pub fn threshold(family: Family, genus: u64) -> Result<Threshold, ColoringError> {
    let g = genus;
    let int = |v: u64| QuadraticSurd { rational: v as i128, coefficient: 0, radicand: 0 };
    let surd = |a: u64, r: u64| QuadraticSurd { rational: a as i128, coefficient: 1, radicand: r as i128 };
    let (exact, integer) = match family {
        Family::Linear => {
            if g == 0 {
                return Err(ColoringError::Precondition("the linear threshold needs g >= 1".into()));
            }
            (int(9 * g - 4), 9 * g - 4)
        }
        Family::TwoKK => (surd(38, 84 * g + 1682), floor_surd(38, 84 * g + 1682)),
        Family::ZeroZeroKK => (surd(20, 48 * g + 481), floor_surd(20, 48 * g + 481)),
        Family::TriangleFree => {
            let v = (10 * g + 32).div_ceil(3);
            (int(v), v)
        }
        Family::Girth7 => {
            let v = 5 + ceil_sqrt(14 * g + 22);
            (int(v), v)
        }
    };
    Ok(Threshold { family, genus, exact, value: exact.to_f64(), integer })
}

/// `K^2 - 76K - 84g - 237` at `K = 38 + sqrt(84g + 1682)`, computed exactly.
pub fn two_k_k_residual(genus: u64) -> QuadraticSurd {
    let k = threshold(Family::TwoKK, genus).unwrap().exact;
    k.mul(k).add(k.scale_add(-76, -84 * genus as i128 - 237))
}

/// `K^2 - 40K - 48g - 80` at `K = 20 + sqrt(48g + 481)`, computed exactly.
pub fn zero_zero_k_k_residual(genus: u64) -> QuadraticSurd {
    let k = threshold(Family::ZeroZeroKK, genus).unwrap().exact;
    k.mul(k).add(k.scale_add(-40, -48 * genus as i128 - 80))
}

/// `K^2 - 10K + 4 - 14g` at `K = 5 + ceil(sqrt(14g + 22))`.
pub fn girth7_residual(genus: u64) -> i128 {
    let k = threshold(Family::Girth7, genus).unwrap().integer as i128;
    k * k - 10 * k + 4 - 14 * genus as i128
}

/// The same residuals in floating point, evaluated at the real threshold.
pub fn two_k_k_residual_f64(genus: u64) -> f64 {
    let k = threshold(Family::TwoKK, genus).unwrap().value;
    k * k - 76.0 * k - 84.0 * genus as f64 - 237.0
}

pub fn zero_zero_k_k_residual_f64(genus: u64) -> f64 {
    let k = threshold(Family::ZeroZeroKK, genus).unwrap().value;
    k * k - 40.0 * k - 48.0 * genus as f64 - 80.0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_at_genus_one() {
        assert_eq!(threshold(Family::Linear, 1).unwrap().integer, 5);
        assert_eq!(threshold(Family::TriangleFree, 1).unwrap().integer, 14);
        assert_eq!(threshold(Family::Girth7, 1).unwrap().integer, 11);
        let t = threshold(Family::TwoKK, 1).unwrap();
        assert_eq!(t.exact.to_string(), "38+sqrt(1766)");
        assert_eq!(t.integer, 38 + 42);
        assert!(threshold(Family::Linear, 0).is_err());
    }

    #[test]
    fn identities_are_exact() {
        for g in 0..200 {
            let one = QuadraticSurd { rational: 1, coefficient: 0, radicand: 0 };
            let a = two_k_k_residual(g);
            assert_eq!((a.rational, a.coefficient), (one.rational, 0));
            let b = zero_zero_k_k_residual(g);
            assert_eq!((b.rational, b.coefficient), (1, 0));
            assert!(girth7_residual(g) >= 1);
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn integer_sqrt_helpers() {
        assert_eq!(ceil_sqrt(36), 6);
        assert_eq!(ceil_sqrt(37), 7);
        assert_eq!(floor_surd(20, 529), 43);
    }
}
