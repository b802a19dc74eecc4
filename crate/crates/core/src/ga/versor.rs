use crate::error::{Error, Result};
use crate::ga::Multivector;

/// Default cap on power-series terms in [`exp_bivector`].
pub const DEFAULT_EXP_TERMS: usize = 64;

const SERIES_TOL: f64 = 1e-15;

/// A product of invertible vectors, acting on multivectors by sandwiching.
#[derive(Clone, Debug, PartialEq)]
pub struct Versor {
    mv: Multivector,
    odd: bool,
}

impl Versor {
    /// Wraps `mv`, checking that `mv · reverse(mv)` is a nonzero scalar to
    /// 1e-9 relative and that all grades share the stated parity.
    pub fn new(mv: Multivector, odd: bool) -> Result<Self> {
        if mv.grades().iter().any(|g| (g % 2 == 1) != odd) {
            return Err(Error::NonInvertibleVersor(format!(
                "mixed parity, expected {}",
                if odd { "odd" } else { "even" }
            )));
        }
        let n = &mv * &mv.reverse();
        let s = n.scalar_part();
        let scale = mv.norm().powi(2);
        let residue = n.grade_project(0).max_diff(&n);
        if scale == 0.0 || s.abs() <= 1e-12 * scale || residue > 1e-9 * scale {
            return Err(Error::NonInvertibleVersor(format!(
                "V·rev(V) = {s} (non-scalar residue {residue})"
            )));
        }
        Ok(Self { mv, odd })
    }

    pub fn identity(sig: &std::sync::Arc<crate::ga::Signature>) -> Self {
        Self {
            mv: Multivector::scalar(sig, 1.0),
            odd: false,
        }
    }

    /// Product of the given grade-1 factors, left to right.
    pub fn from_vectors(vectors: &[Multivector]) -> Result<Self> {
        let first = vectors
            .first()
            .ok_or_else(|| Error::NonInvertibleVersor("no factors".into()))?;
        let mut mv = Multivector::scalar(first.signature(), 1.0);
        for v in vectors {
            if v.homogeneous_grade() != Some(1) {
                return Err(Error::ExpectedGrade(1));
            }
            mv = mv.geometric_product(v)?;
        }
        Self::new(mv, vectors.len() % 2 == 1)
    }

    pub fn multivector(&self) -> &Multivector {
        &self.mv
    }

    pub fn into_multivector(self) -> Multivector {
        self.mv
    }

    pub fn is_odd(&self) -> bool {
        self.odd
    }

    /// Composite versor: `other` acts first, then `self`.
    pub fn compose(&self, other: &Versor) -> Result<Versor> {
        Versor::new(self.mv.geometric_product(&other.mv)?, self.odd ^ other.odd)
    }

    /// `V x̂ Ṽ / (V Ṽ)`, where `x̂` is the grade involution of `x` for odd
    /// versors and `x` itself otherwise.
    pub fn apply(&self, x: &Multivector) -> Result<Multivector> {
        let norm = (&self.mv * &self.mv.reverse()).scalar_part();
        let x = if self.odd { x.involute() } else { x.clone() };
        let out = self.mv.geometric_product(&x)?.geometric_product(&self.mv.reverse())?;
        Ok(out.scale(1.0 / norm))
    }
}

/// Sandwich action of a versor; see [`Versor::apply`].
pub fn apply_versor(v: &Versor, x: &Multivector) -> Result<Multivector> {
    v.apply(x)
}

/// `exp(B)` for a homogeneous bivector `B`.
///
/// When `B²` is a scalar the closed form is used (trigonometric for
/// `B² < 0`, hyperbolic for `B² > 0`, `1 + B` when nilpotent). Otherwise the
/// power series is summed with scaling and squaring, up to `max_terms` terms
/// per evaluation.
pub fn exp_bivector(b: &Multivector, max_terms: usize) -> Result<Versor> {
    check_bivector(b)?;
    let sig = b.signature();
    let b2 = b * b;
    let sq = b2.scalar_part();
    let scale = b.norm().powi(2);
    if b2.grade_project(0).max_diff(&b2) <= 1e-12 * scale.max(1e-300) {
        let one = Multivector::scalar(sig, 1.0);
        let mv = if sq.abs() <= 1e-15 * scale {
            &one + b
        } else if sq < 0.0 {
            let t = (-sq).sqrt();
            &one.scale(t.cos()) + &b.scale(t.sin() / t)
        } else {
            let t = sq.sqrt();
            &one.scale(t.cosh()) + &b.scale(t.sinh() / t)
        };
        return Versor::new(mv, false);
    }
    Versor::new(exp_series(b, max_terms), false)
}

/// `exp(B)` by the power series alone, for cross-checking the closed forms.
pub fn exp_bivector_series(b: &Multivector, max_terms: usize) -> Result<Versor> {
    check_bivector(b)?;
    Versor::new(exp_series(b, max_terms), false)
}

fn check_bivector(b: &Multivector) -> Result<()> {
    if b.is_zero() || b.homogeneous_grade() == Some(2) {
        Ok(())
    } else {
        Err(Error::NotABivector)
    }
}

fn exp_series(b: &Multivector, max_terms: usize) -> Multivector {
    let sig = b.signature();
    let norm = b.norm();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let scaled = b.scale(0.5f64.powi(squarings));
    let mut sum = Multivector::scalar(sig, 1.0);
    let mut term = Multivector::scalar(sig, 1.0);
    for n in 1..=max_terms.max(1) {
        term = (&term * &scaled).scale(1.0 / n as f64);
        sum += &term;
        if term.norm() < SERIES_TOL * sum.norm().max(1.0) {
            break;
        }
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}
