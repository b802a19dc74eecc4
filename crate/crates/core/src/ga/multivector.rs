use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ga::Signature;

/// Coefficients below this magnitude are dropped by [`Multivector::pruned`].
pub const PRUNE_EPS: f64 = 1e-12;

/// A basis blade, stored as a bitset over basis-vector indices. Bit `i` set
/// means `e_i` is a factor; factors are taken in ascending index order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade(pub u8);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn vector(i: usize) -> Self {
        Blade(1 << i)
    }

    #[inline]
    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..8).filter(move |i| self.0 & (1 << i) != 0)
    }
}

/// Sign picked up by reordering the concatenated factors of `a` and `b` into
/// canonical ascending order.
#[inline]
fn reorder_sign(a: u8, b: u8) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Geometric product of two basis blades: `(sign, mask)`.
#[inline]
pub(crate) fn blade_product(sig: &Signature, a: u8, b: u8) -> (f64, u8) {
    let mut sign = reorder_sign(a, b);
    let mut common = a & b;
    while common != 0 {
        let i = common.trailing_zeros() as usize;
        sign *= sig.square(i);
        common &= common - 1;
    }
    (sign, a ^ b)
}

/// Sparse multivector over a fixed [`Signature`].
///
/// Zero coefficients are only removed at explicit normalization points
/// ([`Multivector::pruned`]); products never drop small terms silently.
#[derive(Clone, Debug)]
pub struct Multivector {
    sig: Arc<Signature>,
    terms: BTreeMap<Blade, f64>,
}

impl PartialEq for Multivector {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.terms == other.terms
    }
}

impl Multivector {
    pub fn zero(sig: &Arc<Signature>) -> Self {
        Self {
            sig: Arc::clone(sig),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(sig: &Arc<Signature>, value: f64) -> Self {
        Self::blade(sig, Blade::SCALAR, value)
    }

    pub fn blade(sig: &Arc<Signature>, blade: Blade, coef: f64) -> Self {
        let mut mv = Self::zero(sig);
        debug_assert!(blade.0 as usize <= sig.full_mask() as usize);
        if coef != 0.0 {
            mv.terms.insert(blade, coef);
        }
        mv
    }

    /// Basis vector `e_i`.
    pub fn basis(sig: &Arc<Signature>, i: usize) -> Self {
        assert!(i < sig.dim(), "basis index {i} out of range");
        Self::blade(sig, Blade::vector(i), 1.0)
    }

    /// Basis vector by label.
    pub fn basis_named(sig: &Arc<Signature>, label: &str) -> Result<Self> {
        sig.index_of(label)
            .map(|i| Self::basis(sig, i))
            .ok_or_else(|| Error::Parse(format!("unknown basis label {label:?}")))
    }

    /// Grade-1 multivector from orthonormal-basis coordinates.
    pub fn vector(sig: &Arc<Signature>, coords: &[f64]) -> Result<Self> {
        if coords.len() != sig.dim() {
            return Err(Error::DimensionMismatch {
                expected: sig.dim(),
                got: coords.len(),
            });
        }
        let mut mv = Self::zero(sig);
        for (i, c) in coords.iter().enumerate() {
            mv.add_term(Blade::vector(i), *c);
        }
        Ok(mv)
    }

    pub fn from_terms(sig: &Arc<Signature>, terms: impl IntoIterator<Item = (Blade, f64)>) -> Self {
        let mut mv = Self::zero(sig);
        for (b, c) in terms {
            mv.add_term(b, c);
        }
        mv
    }

    /// The canonical pseudoscalar: product of all basis vectors in label order.
    pub fn pseudoscalar(sig: &Arc<Signature>) -> Self {
        Self::blade(sig, Blade(sig.full_mask()), 1.0)
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.sig, &other.sig) || self.sig == other.sig
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::IncompatibleAlgebras(
                self.sig.to_string(),
                other.sig.to_string(),
            ))
        }
    }

    fn add_term(&mut self, blade: Blade, coef: f64) {
        if coef == 0.0 {
            return;
        }
        let entry = self.terms.entry(blade).or_insert(0.0);
        *entry += coef;
        if *entry == 0.0 {
            self.terms.remove(&blade);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, f64)> + '_ {
        self.terms.iter().map(|(b, c)| (*b, *c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, blade: Blade) -> f64 {
        self.terms.get(&blade).copied().unwrap_or(0.0)
    }

    pub fn scalar_part(&self) -> f64 {
        self.coefficient(Blade::SCALAR)
    }

    /// Orthonormal-basis coordinates of the grade-1 part.
    pub fn vector_coords(&self) -> Vec<f64> {
        (0..self.sig.dim())
            .map(|i| self.coefficient(Blade::vector(i)))
            .collect()
    }

    /// Dense coefficient vector indexed by blade mask.
    pub fn dense(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.sig.blade_count()];
        for (b, c) in self.terms() {
            out[b.0 as usize] = c;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        self.terms.values().fold(0.0, |s, c| s + c * c).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Drops coefficients with magnitude `<= eps`.
    pub fn pruned(&self, eps: f64) -> Self {
        Self {
            sig: Arc::clone(&self.sig),
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| c.abs() > eps)
                .map(|(b, c)| (*b, *c))
                .collect(),
        }
    }

    /// Grade normalization at the default epsilon.
    pub fn normalized(&self) -> Self {
        self.pruned(PRUNE_EPS)
    }

    /// Sorted list of grades with a nonzero coefficient.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(|b| b.grade()).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    /// `Some(k)` if every stored term has grade `k`. The zero multivector is
    /// homogeneous of every grade and reports `None`.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        match self.grades().as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }

    pub fn grade_project(&self, k: usize) -> Self {
        self.filter(|b| b.grade() == k)
    }

    /// Checked form of [`Multivector::grade_project`].
    pub fn try_grade_project(&self, k: usize) -> Result<Self> {
        if k > self.sig.dim() {
            return Err(Error::GradeOutOfRange {
                got: k,
                dim: self.sig.dim(),
            });
        }
        Ok(self.grade_project(k))
    }

    fn filter(&self, keep: impl Fn(Blade) -> bool) -> Self {
        Self {
            sig: Arc::clone(&self.sig),
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(**b))
                .map(|(b, c)| (*b, *c))
                .collect(),
        }
    }

    fn map_coefs(&self, f: impl Fn(Blade, f64) -> f64) -> Self {
        Self {
            sig: Arc::clone(&self.sig),
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, f(*b, *c)))
                .filter(|(_, c)| *c != 0.0)
                .collect(),
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map_coefs(|_, c| c * s)
    }

    /// Reversion: each grade-k part picks up `(-1)^(k(k-1)/2)`.
    pub fn reverse(&self) -> Self {
        self.map_coefs(|b, c| {
            let k = b.grade();
            if (k * k.saturating_sub(1) / 2) % 2 == 0 {
                c
            } else {
                -c
            }
        })
    }

    /// Grade involution: each grade-k part picks up `(-1)^k`.
    pub fn involute(&self) -> Self {
        self.map_coefs(|b, c| if b.grade() % 2 == 0 { c } else { -c })
    }

    fn bilinear(&self, other: &Self, keep: impl Fn(u8, u8) -> bool) -> Self {
        let mut out = Self::zero(&self.sig);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if keep(a.0, b.0) {
                    let (sign, mask) = blade_product(&self.sig, a.0, b.0);
                    out.add_term(Blade(mask), sign * ca * cb);
                }
            }
        }
        out
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.bilinear(other, |_, _| true))
    }

    /// Outer (wedge) product. On basis blades this keeps the product only when
    /// the factor sets are disjoint, i.e. the grade-(r+s) part.
    pub fn outer_product(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.bilinear(other, |a, b| a & b == 0))
    }

    /// Inner product. For two vectors this is the symmetric metric pairing.
    /// For mixed grades the lower-grade argument is contracted onto the
    /// higher one: on basis blades of grades r and s the result is the
    /// grade-|r-s| part of the geometric product (left contraction when
    /// r <= s, right contraction when r > s).
    pub fn inner_product(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.bilinear(other, |a, b| a & b == a || a & b == b))
    }

    /// Left contraction `a ⌋ b`: grade s-r part for r <= s, zero otherwise.
    pub fn left_contraction(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.bilinear(other, |a, b| a & b == a))
    }

    /// Scalar product `<a b>_0`.
    pub fn scalar_product(&self, other: &Self) -> Result<f64> {
        self.check_same(other)?;
        let mut s = 0.0;
        for (a, ca) in &self.terms {
            if let Some(cb) = other.terms.get(a) {
                let (sign, _) = blade_product(&self.sig, a.0, a.0);
                s += sign * ca * cb;
            }
        }
        Ok(s)
    }

    /// `(ab - ba) / 2`.
    pub fn commutator_half(&self, other: &Self) -> Result<Self> {
        let ab = self.geometric_product(other)?;
        let ba = other.geometric_product(self)?;
        Ok((&ab - &ba).scale(0.5))
    }

    pub fn pseudoscalar_square(sig: &Arc<Signature>) -> f64 {
        let full = sig.full_mask();
        blade_product(sig, full, full).0
    }

    /// `a · I⁻¹` with `I` the canonical pseudoscalar.
    pub fn dual(&self) -> Self {
        let i2 = Self::pseudoscalar_square(&self.sig);
        let inv = Self::pseudoscalar(&self.sig).scale(1.0 / i2);
        self.inner_product(&inv).expect("same algebra")
    }

    /// Inverse of [`Multivector::dual`]: `a · I`.
    pub fn undual(&self) -> Self {
        self.inner_product(&Self::pseudoscalar(&self.sig))
            .expect("same algebra")
    }

    /// Inverse for multivectors whose `x x̃` is a nonzero scalar (blades and
    /// versors).
    pub fn versor_inverse(&self) -> Result<Self> {
        let rev = self.reverse();
        let n = self.geometric_product(&rev)?;
        let s = n.scalar_part();
        let scale = self.norm().powi(2).max(f64::MIN_POSITIVE);
        let rest = (&n - &Self::scalar(&self.sig, s)).norm();
        if s.abs() <= 1e-12 * scale || rest > 1e-9 * scale {
            return Err(Error::NonInvertibleVersor(format!(
                "x·rev(x) = {s} with non-scalar residue {rest}"
            )));
        }
        Ok(rev.scale(1.0 / s))
    }

    /// Maximum absolute coefficient difference.
    pub fn max_diff(&self, other: &Self) -> f64 {
        (self - other).max_abs()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.same_algebra(other) && self.max_diff(other) <= tol
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        assert!(self.same_algebra(rhs), "incompatible algebras");
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.add_term(b, c);
        }
        out
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        assert!(self.same_algebra(rhs), "incompatible algebras");
        for (b, c) in rhs.terms() {
            self.add_term(b, c);
        }
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        assert!(self.same_algebra(rhs), "incompatible algebras");
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.add_term(b, -c);
        }
        out
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

/// Geometric product. Panics on mismatched algebras; use
/// [`Multivector::geometric_product`] for the checked form.
impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs).expect("incompatible algebras")
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        &self * &rhs
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<&Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        rhs.scale(self)
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        rhs.scale(self)
    }
}
