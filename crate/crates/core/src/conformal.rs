//! Conformal models of flat target spaces.
//!
//! A target signature `(p,q)` is extended by `e+` (square +1) and `e-`
//! (square -1). The origin and the point at infinity are the null vectors
//!
//! ```text
//! O   = (e+ + e-) / √2
//! inf = (e- - e+) / √2        so that O·inf = -1,  e± = (O ∓ inf) / √2
//! ```
//!
//! and a target point `x` embeds as `P(x) = O + x + ½ (x·x) inf`, which is
//! null and normalised by `P(x)·inf = -1`. With this normalisation
//! `P(a)·P(b) = -½ |a - b|²`, the standard convention. The literal
//! `P(a)·P(b)` is available as [`Convention::Paper`].

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ga::{parse_multivector_with, Blade, Multivector, Signature};

/// Relative threshold for zero tests on blades (incidence, flatness, null).
pub const ZERO_REL: f64 = 1e-9;

/// A conformal model space with its distinguished null vectors.
#[derive(Clone, Debug)]
pub struct ConformalModel {
    target: Signature,
    sig: Arc<Signature>,
    origin: Multivector,
    infinity: Multivector,
}

/// Coordinates of a point in the target space.
#[derive(Clone, Debug, PartialEq)]
pub struct TargetPoint(pub Vec<f64>);

impl TargetPoint {
    pub fn new(coords: impl Into<Vec<f64>>) -> Self {
        Self(coords.into())
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl FromStr for TargetPoint {
    type Err = Error;

    /// Comma-separated coordinates, e.g. `3,4` or `-1.5, 0`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|c| {
                let c = c.trim();
                c.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| Error::Parse(format!("bad coordinate {c:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(TargetPoint)
    }
}

/// How to read the inner product of two embedded points as a squared
/// distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// `d² = -2 P(a)·P(b)`; equals the target-metric squared distance.
    Standard,
    /// `d² = P(a)·P(b)` taken literally; equals `-½` times the target-metric
    /// squared distance under this model's normalisation.
    Paper,
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Self::Standard),
            "paper" => Ok(Self::Paper),
            _ => Err(Error::Parse(format!("unknown convention {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Representation {
    /// Outer product of points on the round; incidence via `x ∧ S = 0`.
    Direct,
    /// Dual of the direct blade; incidence via `x · S = 0`.
    Dual,
}

impl Representation {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Direct => "direct",
            Self::Dual => "dual",
        }
    }
}

impl FromStr for Representation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Self::Direct),
            "dual" => Ok(Self::Dual),
            _ => Err(Error::Parse(format!("unknown representation {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RoundKind {
    Point,
    PointPair,
    /// Real round in a Euclidean target: circles, and codimension-one rounds
    /// generally.
    Circle,
    /// Anything containing the point at infinity (lines, planes, flat points).
    LineFlat,
    /// Codimension-one round in a Minkowski target with positive squared
    /// radius.
    ShellSpacelike,
    /// Codimension-one round in a Minkowski target with negative squared
    /// radius.
    ShellTimelike,
    /// Zero blade, non-null direct vector, or imaginary Euclidean round.
    Degenerate,
}

impl RoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Point => "point",
            Self::PointPair => "point-pair",
            Self::Circle => "circle",
            Self::LineFlat => "line/flat",
            Self::ShellSpacelike => "shell-spacelike",
            Self::ShellTimelike => "shell-timelike",
            Self::Degenerate => "degenerate",
        }
    }
}

impl fmt::Display for RoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A homogeneous blade tagged with its geometric kind.
#[derive(Clone, Debug, PartialEq)]
pub struct RoundBlade {
    pub blade: Multivector,
    pub kind: RoundKind,
    pub representation: Representation,
}

impl RoundBlade {
    /// Grade of the blade; 0 for the zero blade.
    pub fn grade(&self) -> usize {
        self.blade.homogeneous_grade().unwrap_or(0)
    }
}

impl ConformalModel {
    /// Builds the conformal model of `target`.
    pub fn new(target: Signature) -> Result<Self> {
        let sig = Arc::new(target.conformal_extension()?);
        let n = target.dim();
        let (ep, em) = (Blade::vector(n), Blade::vector(n + 1));
        let origin = Multivector::from_terms(&sig, [(ep, FRAC_1_SQRT_2), (em, FRAC_1_SQRT_2)]);
        let infinity = Multivector::from_terms(&sig, [(ep, -FRAC_1_SQRT_2), (em, FRAC_1_SQRT_2)]);
        Ok(Self {
            target,
            sig,
            origin,
            infinity,
        })
    }

    /// `E2`, `M11`, `E3`, `M21` or `M31`.
    pub fn from_alias(alias: &str) -> Result<Self> {
        let target = Signature::target_of_alias(alias)
            .ok_or_else(|| Error::Parse(format!("unknown model alias {alias:?}")))?;
        Self::new(target)
    }

    pub fn target(&self) -> &Signature {
        &self.target
    }

    pub fn target_dim(&self) -> usize {
        self.target.dim()
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn origin(&self) -> &Multivector {
        &self.origin
    }

    pub fn infinity(&self) -> &Multivector {
        &self.infinity
    }

    pub fn e_plus(&self) -> Multivector {
        Multivector::basis(&self.sig, self.target.dim())
    }

    pub fn e_minus(&self) -> Multivector {
        Multivector::basis(&self.sig, self.target.dim() + 1)
    }

    /// True when the target metric has a negative direction.
    pub fn is_minkowski(&self) -> bool {
        self.target.q() > 0
    }

    /// Parses the text format with `O` and `inf` available as names.
    pub fn parse(&self, text: &str) -> Result<Multivector> {
        parse_multivector_with(
            &self.sig,
            text,
            &[("O", &self.origin), ("inf", &self.infinity)],
        )
    }

    fn check_point(&self, x: &TargetPoint) -> Result<()> {
        if x.dim() != self.target_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.target_dim(),
                got: x.dim(),
            });
        }
        Ok(())
    }

    /// Target-metric inner product of two coordinate lists.
    pub fn target_dot(&self, a: &[f64], b: &[f64]) -> f64 {
        a.iter()
            .zip(b)
            .enumerate()
            .map(|(i, (x, y))| self.target.square(i) * x * y)
            .sum()
    }

    /// `O + x + ½ (x·x) inf`.
    pub fn embed_point(&self, x: &TargetPoint) -> Result<Multivector> {
        self.check_point(x)?;
        let n = self.target_dim();
        let half_sq = 0.5 * self.target_dot(x.coords(), x.coords());
        let mut terms: Vec<(Blade, f64)> = x
            .coords()
            .iter()
            .enumerate()
            .map(|(i, c)| (Blade::vector(i), *c))
            .collect();
        terms.push((Blade::vector(n), (1.0 - half_sq) * FRAC_1_SQRT_2));
        terms.push((Blade::vector(n + 1), (1.0 + half_sq) * FRAC_1_SQRT_2));
        Ok(Multivector::from_terms(&self.sig, terms))
    }

    /// `v · inf` for a vector `v`.
    pub fn dot_infinity(&self, v: &Multivector) -> Result<f64> {
        v.scalar_product(&self.infinity)
    }

    /// Inverse of [`ConformalModel::embed_point`] up to scale: normalises
    /// `v·inf = -1` and reads off the target coordinates.
    pub fn project_point(&self, v: &Multivector) -> Result<TargetPoint> {
        if !v.same_algebra(&self.origin) {
            return Err(Error::IncompatibleAlgebras(
                v.signature().to_string(),
                self.sig.to_string(),
            ));
        }
        if v.grades().iter().any(|g| *g != 1) {
            return Err(Error::ExpectedGrade(1));
        }
        let s = self.dot_infinity(v)?;
        if s.abs() <= 1e-12 * v.norm() || v.is_zero() {
            return Err(Error::PointAtInfinity);
        }
        let coords = (0..self.target_dim())
            .map(|i| v.coefficient(Blade::vector(i)) / -s)
            .collect();
        Ok(TargetPoint(coords))
    }

    pub fn squared_distance(
        &self,
        a: &TargetPoint,
        b: &TargetPoint,
        convention: Convention,
    ) -> Result<f64> {
        let pa = self.embed_point(a)?;
        let pb = self.embed_point(b)?;
        let dot = pa.scalar_product(&pb)?;
        Ok(match convention {
            Convention::Standard => -2.0 * dot,
            Convention::Paper => dot,
        })
    }

    /// Direct-representation blade `P(a) ∧ P(b) ∧ P(c)`. Coincident points
    /// give the zero blade tagged [`RoundKind::Degenerate`]; collinear points
    /// give [`RoundKind::LineFlat`].
    pub fn circle_through(
        &self,
        a: &TargetPoint,
        b: &TargetPoint,
        c: &TargetPoint,
    ) -> Result<RoundBlade> {
        let pts = [self.embed_point(a)?, self.embed_point(b)?, self.embed_point(c)?];
        let blade = pts[0].outer_product(&pts[1])?.outer_product(&pts[2])?;
        let scale: f64 = pts.iter().map(Multivector::norm).product();
        if blade.norm() <= ZERO_REL * scale {
            return Ok(RoundBlade {
                blade: Multivector::zero(&self.sig),
                kind: RoundKind::Degenerate,
                representation: Representation::Direct,
            });
        }
        self.round(blade, Representation::Direct)
    }

    /// Tags `blade` with its classification.
    pub fn round(&self, blade: Multivector, representation: Representation) -> Result<RoundBlade> {
        if !blade.same_algebra(&self.origin) {
            return Err(Error::IncompatibleAlgebras(
                blade.signature().to_string(),
                self.sig.to_string(),
            ));
        }
        if !blade.is_zero() && blade.homogeneous_grade().is_none() {
            return Err(Error::ExpectedGrade(blade.grades()[0]));
        }
        let kind = self.classify_round(&blade, representation);
        Ok(RoundBlade {
            blade,
            kind,
            representation,
        })
    }

    /// Dual round `P(center) - ½ r2 inf`, the vector whose zero set is the
    /// round of squared radius `r2` (negative allowed) about `center`.
    pub fn dual_round(&self, center: &TargetPoint, r2: f64) -> Result<RoundBlade> {
        let p = self.embed_point(center)?;
        let sigma = &p - &self.infinity.scale(0.5 * r2);
        self.round(sigma, Representation::Dual)
    }

    /// Switches a round between direct and dual representation.
    pub fn dualize(&self, round: &RoundBlade) -> RoundBlade {
        let (blade, representation) = match round.representation {
            Representation::Direct => (round.blade.dual(), Representation::Dual),
            Representation::Dual => (round.blade.undual(), Representation::Direct),
        };
        RoundBlade {
            blade,
            kind: round.kind,
            representation,
        }
    }

    /// Norm of `P(x) ∧ S`; zero iff `x` lies on the round.
    pub fn incidence_direct(&self, x: &TargetPoint, round: &RoundBlade) -> Result<f64> {
        if round.representation != Representation::Direct {
            return Err(Error::RepresentationMismatch("direct"));
        }
        let p = self.embed_point(x)?;
        Ok(p.outer_product(&round.blade)?.norm())
    }

    /// `P(x) · Sd` for a dual round. Grade-1 duals give the signed scalar;
    /// higher grades give the norm of the contraction.
    pub fn incidence_dual(&self, x: &TargetPoint, round: &RoundBlade) -> Result<f64> {
        if round.representation != Representation::Dual {
            return Err(Error::RepresentationMismatch("dual"));
        }
        let p = self.embed_point(x)?;
        let c = p.inner_product(&round.blade)?;
        Ok(match round.blade.homogeneous_grade() {
            Some(1) => c.scalar_part(),
            _ => c.norm(),
        })
    }

    /// Incidence verdict at [`ZERO_REL`] relative to the point and blade
    /// norms, in either representation. Degenerate rounds contain nothing.
    pub fn is_incident(&self, x: &TargetPoint, round: &RoundBlade) -> Result<bool> {
        if round.kind == RoundKind::Degenerate && round.blade.is_zero() {
            return Ok(false);
        }
        let value = match round.representation {
            Representation::Direct => self.incidence_direct(x, round)?,
            Representation::Dual => self.incidence_dual(x, round)?,
        };
        let scale = self.embed_point(x)?.norm() * round.blade.norm();
        Ok(value.abs() <= ZERO_REL * scale)
    }

    /// Deterministic decision tree on the direct grade `k` of the blade:
    ///
    /// * zero blade: degenerate
    /// * `inf ∧ S = 0`: line/flat
    /// * `k = 1`: point if null, else degenerate
    /// * `k = n-1`: sign of `σ·σ` for the dual vector `σ`: null is a point;
    ///   Minkowski targets give spacelike (`> 0`) or timelike (`< 0`)
    ///   shells; Euclidean targets give a circle (`> 0`) or an imaginary,
    ///   degenerate round (`< 0`)
    /// * `k = 2`: point pair
    /// * otherwise: circle
    pub fn classify_round(&self, blade: &Multivector, representation: Representation) -> RoundKind {
        let blade = blade.normalized();
        if blade.is_zero() {
            return RoundKind::Degenerate;
        }
        let direct = match representation {
            Representation::Direct => blade,
            Representation::Dual => blade.undual(),
        };
        let Some(k) = direct.homogeneous_grade() else {
            return RoundKind::Degenerate;
        };
        let n = self.sig.dim();
        let flat = self.infinity.outer_product(&direct).expect("same algebra");
        if flat.norm() <= ZERO_REL * direct.norm() * self.infinity.norm() {
            return RoundKind::LineFlat;
        }
        let null = |v: &Multivector| {
            let sq = v.scalar_product(v).expect("same algebra");
            (sq, sq.abs() <= ZERO_REL * v.norm().powi(2))
        };
        if k == 1 {
            return if null(&direct).1 {
                RoundKind::Point
            } else {
                RoundKind::Degenerate
            };
        }
        if k == n - 1 {
            let sigma = direct.dual();
            let (sq, is_null) = null(&sigma);
            return match (is_null, self.is_minkowski(), sq > 0.0) {
                (true, _, _) => RoundKind::Point,
                (false, true, true) => RoundKind::ShellSpacelike,
                (false, true, false) => RoundKind::ShellTimelike,
                (false, false, true) => RoundKind::Circle,
                (false, false, false) => RoundKind::Degenerate,
            };
        }
        if k == 2 {
            return RoundKind::PointPair;
        }
        RoundKind::Circle
    }
}
