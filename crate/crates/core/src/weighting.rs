//! Degree-pair weight functions `f(d_i, d_j)`.
//!
//! The p-Sombor weight is `(x^p + y^p)^(1/p)`; `p = +inf` is its limit
//! `max(x, y)`. Evaluation works on `min/max` so the result is exactly
//! symmetric, and away from `p = 1, 2` uses
//! `max * (1 + (min/max)^p)^(1/p)`, which neither overflows for large `p`
//! nor loses the ordering in `p` to rounding.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// p-Sombor exponent: a nonzero real or `+inf`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Exponent {
    Finite(f64),
    Infinite,
}

impl Exponent {
    pub fn finite(p: f64) -> Result<Self> {
        if p == 0.0 {
            Err(Error::ZeroExponent)
        } else if p.is_nan() {
            Err(Error::WeightingSpec("p is NaN".into()))
        } else if p == f64::INFINITY {
            Ok(Self::Infinite)
        } else if p.is_infinite() {
            Err(Error::WeightingSpec("p = -inf is not supported".into()))
        } else {
            Ok(Self::Finite(p))
        }
    }

    /// Value as `f64`, with `+inf` for the limit.
    pub fn value(&self) -> f64 {
        match self {
            Self::Finite(p) => *p,
            Self::Infinite => f64::INFINITY,
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(p) => write!(f, "{p}"),
            Self::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "+inf" | "infinity" | "∞" => Ok(Self::Infinite),
            t => {
                let p: f64 = t
                    .parse()
                    .map_err(|_| Error::WeightingSpec(format!("bad exponent {s:?}")))?;
                Self::finite(p)
            }
        }
    }
}

type WeightFn = dyn Fn(usize, usize) -> f64 + Send + Sync;

/// Symmetric positive weighting of degree pairs.
#[derive(Clone)]
pub enum WeightFunction {
    PSombor(Exponent),
    /// `f = 1`: the ordinary adjacency matrix.
    Adjacency,
    /// Tabulated weights, `table[(min, max)]`.
    Table {
        name: String,
        table: Arc<BTreeMap<(usize, usize), f64>>,
    },
    /// Arbitrary closure; the caller vouches for symmetry and positivity.
    Closure {
        name: String,
        f: Arc<WeightFn>,
    },
}

impl fmt::Debug for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightFunction({self})")
    }
}

impl fmt::Display for WeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::PSombor(p) => write!(f, "psombor:{p}"),
            Self::Adjacency => f.write_str("adjacency"),
            Self::Table { name, .. } | Self::Closure { name, .. } => write!(f, "custom:{name}"),
        }
    }
}

impl PartialEq for WeightFunction {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Self::PSombor(a), Self::PSombor(b)) => a == b,
            (Self::Adjacency, Self::Adjacency) => true,
            (Self::Table { table: a, name: x }, Self::Table { table: b, name: y }) => x == y && a == b,
            (Self::Closure { f: a, .. }, Self::Closure { f: b, .. }) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }
}

/// On-disk custom weighting: `weights[i][j] = f(i + 1, j + 1)`.
#[derive(Debug, Serialize, Deserialize)]
struct TableDoc {
    #[serde(default)]
    name: Option<String>,
    weights: Vec<Vec<f64>>,
}

impl WeightFunction {
    pub fn psombor(p: f64) -> Result<Self> {
        Ok(Self::PSombor(Exponent::finite(p)?))
    }

    pub fn psombor_inf() -> Self {
        Self::PSombor(Exponent::Infinite)
    }

    pub fn closure(name: impl Into<String>, f: impl Fn(usize, usize) -> f64 + Send + Sync + 'static) -> Self {
        Self::Closure {
            name: name.into(),
            f: Arc::new(f),
        }
    }

    /// Builds a table weighting from a square matrix indexed by degree - 1.
    /// Rejects asymmetric or nonpositive entries.
    pub fn table(name: impl Into<String>, weights: &[Vec<f64>]) -> Result<Self> {
        let k = weights.len();
        let mut table = BTreeMap::new();
        for (i, row) in weights.iter().enumerate() {
            if row.len() != k {
                return Err(Error::WeightingSpec("weight table must be square".into()));
            }
            for (j, &w) in row.iter().enumerate() {
                if !(w > 0.0 && w.is_finite()) {
                    return Err(Error::WeightingSpec(format!(
                        "weight f({}, {}) = {w} is not positive",
                        i + 1,
                        j + 1
                    )));
                }
                if weights[j][i] != w {
                    return Err(Error::WeightingSpec(format!(
                        "weight table asymmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
                table.insert((i + 1, j + 1), w);
            }
        }
        Ok(Self::Table {
            name: name.into(),
            table: Arc::new(table),
        })
    }

    pub fn table_from_json(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let doc: TableDoc = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        let name = doc.name.unwrap_or_else(|| path.display().to_string());
        Self::table(name, &doc.weights)
    }

    /// The exponent if this is a p-Sombor weighting.
    pub fn exponent(&self) -> Option<Exponent> {
        match self {
            Self::PSombor(p) => Some(*p),
            _ => None,
        }
    }

    /// `f(di, dj)` in the scalar type `T`.
    pub fn eval<T: Scalar>(&self, di: usize, dj: usize) -> Result<T> {
        for d in [di, dj] {
            if d == 0 {
                return Err(Error::NonPositiveDegree(d));
            }
        }
        let (lo, hi) = (di.min(dj), di.max(dj));
        match self {
            Self::PSombor(p) => psombor_weight(T::from_count(lo), T::from_count(hi), *p),
            Self::Adjacency => Ok(T::one()),
            Self::Table { name, table } => table
                .get(&(lo, hi))
                .map(|&w| T::lit(w))
                .ok_or_else(|| Error::InvalidParameter(format!("table {name} has no entry for ({lo}, {hi})"))),
            Self::Closure { f, .. } => {
                let w = f(lo, hi);
                if w > 0.0 && w.is_finite() {
                    Ok(T::lit(w))
                } else {
                    Err(Error::InvalidParameter(format!(
                        "weight f({lo}, {hi}) = {w} is not positive"
                    )))
                }
            }
        }
    }
}

fn psombor_weight<T: Scalar>(lo: T, hi: T, p: Exponent) -> Result<T> {
    let p = match p {
        Exponent::Infinite => return Ok(hi),
        Exponent::Finite(0.0) => return Err(Error::ZeroExponent),
        Exponent::Finite(p) => p,
    };
    let w = if p == 1.0 {
        lo + hi
    } else if p == 2.0 {
        lo.hypot(hi)
    } else {
        // ratio <= 1 raised to |p| cannot overflow
        let ratio = lo / hi;
        let s = ratio.powf(T::lit(p.abs()));
        let factor = (s.ln_1p() / T::lit(p)).exp();
        if p > 0.0 {
            hi * factor
        } else {
            lo * factor
        }
    };
    Ok(w)
}

impl FromStr for WeightFunction {
    type Err = Error;

    /// `psombor:<p>` (decimal or `inf`), `adjacency`, `custom:<path>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("adjacency") || s.eq_ignore_ascii_case("adj") {
            return Ok(Self::Adjacency);
        }
        match s.split_once(':') {
            Some((kind, p)) if kind.eq_ignore_ascii_case("psombor") => Ok(Self::PSombor(p.parse()?)),
            Some((kind, path)) if kind.eq_ignore_ascii_case("custom") => Self::table_from_json(path),
            _ => Err(Error::WeightingSpec(format!("unrecognised weighting {s:?}"))),
        }
    }
}

/// Which part of property P* failed, with the witnessing degrees.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PStarViolation {
    Decreasing { x: usize, y: usize },
    Concave { x: usize, y: usize },
    Spread { x1: usize, y1: usize, x2: usize, y2: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PStarReport {
    pub increasing_ok: bool,
    pub convex_ok: bool,
    pub spread_ok: bool,
    pub counterexample: Option<PStarViolation>,
}

impl PStarReport {
    pub fn passed(&self) -> bool {
        self.increasing_ok && self.convex_ok && self.spread_ok
    }
}

fn slack(a: f64, b: f64) -> f64 {
    1e-12 * a.abs().max(b.abs()).max(1.0)
}

/// Checks property P* on the integer grid `1..=max_degree`: `f(x, y)`
/// nondecreasing and convex in `x`, and for `x1 + y1 = x2 + y2` with
/// `|x1 - y1| > |x2 - y2|`, `f(x1, y1) >= f(x2, y2)`.
pub fn check_property_pstar(f: &WeightFunction, max_degree: usize) -> Result<PStarReport> {
    if max_degree < 2 {
        return Err(Error::InvalidParameter(format!(
            "max_degree must be >= 2, got {max_degree}"
        )));
    }
    let k = max_degree;
    let mut grid = vec![vec![0.0f64; k + 1]; k + 1];
    for (x, row) in grid.iter_mut().enumerate().skip(1) {
        for (y, cell) in row.iter_mut().enumerate().skip(1) {
            *cell = f.eval(x, y)?;
        }
    }
    let mut report = PStarReport {
        increasing_ok: true,
        convex_ok: true,
        spread_ok: true,
        counterexample: None,
    };
    let fail = |report: &mut PStarReport, v: PStarViolation| {
        if report.counterexample.is_none() {
            report.counterexample = Some(v);
        }
    };
    for y in 1..=k {
        for x in 1..k {
            let (a, b) = (grid[x][y], grid[x + 1][y]);
            if b < a - slack(a, b) {
                report.increasing_ok = false;
                fail(&mut report, PStarViolation::Decreasing { x, y });
            }
        }
        for x in 1..k.saturating_sub(1) {
            let second = grid[x + 2][y] - 2.0 * grid[x + 1][y] + grid[x][y];
            if second < -slack(grid[x + 2][y], grid[x][y]) {
                report.convex_ok = false;
                fail(&mut report, PStarViolation::Concave { x, y });
            }
        }
    }
    for sum in 2..=2 * k {
        // pairs x <= y with x + y = sum, ordered by decreasing spread
        let pairs: Vec<(usize, usize)> = (1..=k)
            .filter_map(|x| {
                let y = sum.checked_sub(x)?;
                (x <= y && y <= k && y >= 1).then_some((x, y))
            })
            .collect();
        for w in pairs.windows(2) {
            let ((x1, y1), (x2, y2)) = (w[0], w[1]);
            let (a, b) = (grid[x1][y1], grid[x2][y2]);
            if a < b - slack(a, b) {
                report.spread_ok = false;
                fail(&mut report, PStarViolation::Spread { x1, y1, x2, y2 });
            }
        }
    }
    Ok(report)
}

/// `f(x, y, p1) - f(x, y, p2)`, which is nonnegative for `2 <= p1 <= p2`.
pub fn p_monotonicity_gap<T: Scalar>(x: usize, y: usize, p1: Exponent, p2: Exponent) -> Result<T> {
    if p1.value() < 2.0 {
        return Err(Error::InvalidParameter(format!("p1 must be >= 2, got {p1}")));
    }
    if p2.value() < p1.value() {
        return Err(Error::InvalidParameter(format!("p2 = {p2} is below p1 = {p1}")));
    }
    let a: T = WeightFunction::PSombor(p1).eval(x, y)?;
    let b: T = WeightFunction::PSombor(p2).eval(x, y)?;
    Ok(a - b)
}
