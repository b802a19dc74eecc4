//! Isometry algebras as bivector spaces and their stabilizer (little)
//! subalgebras.
//!
//! The Lie bracket throughout is `[A, B] = (AB - BA)/2`, under which the
//! coordinate bivectors `e_i e_j` of `Cl(p,q)` span `so(p,q)` and a bivector
//! `B` acts on a multivector `x` by `[B, x]`.

use std::fmt;
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};

use crate::conformal::ConformalModel;
use crate::error::{Error, Result};
use crate::ga::{Blade, Multivector, Signature};
use crate::linalg;

/// Default singular-value cutoff, relative to the largest singular value.
pub const DEFAULT_RANK_TOL: f64 = 1e-9;

/// Relative cutoff for zero eigenvalues of the Killing form.
const KILLING_ZERO_REL: f64 = 1e-9;

/// Bracket closure and span residuals above this (relative) are errors.
const CLOSURE_TOL: f64 = 1e-9;

/// A basis of bivectors with structure constants and Killing form.
#[derive(Clone, Debug)]
pub struct LieAlgebraPresentation {
    sig: Arc<Signature>,
    basis: Vec<Multivector>,
    solver: Arc<linalg::SpanSolver>,
    /// `c[(i * d + j) * d + k]` with `[B_i, B_j] = Σ_k c_ijk B_k`.
    structure: Vec<f64>,
    killing: DMatrix<f64>,
}

/// Grade-2 blade masks of a signature in ascending `(i, j)` order.
fn bivector_masks(sig: &Signature) -> Vec<u8> {
    let n = sig.dim();
    let mut masks = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            masks.push((1u8 << i) | (1u8 << j));
        }
    }
    masks
}

fn coefficient_column(mv: &Multivector, masks: &[u8]) -> DVector<f64> {
    DVector::from_iterator(masks.len(), masks.iter().map(|m| mv.coefficient(Blade(*m))))
}

impl LieAlgebraPresentation {
    /// Presentation of the span of `elements`, which must be linearly
    /// independent homogeneous bivectors closed under the bracket.
    pub fn from_basis(sig: &Arc<Signature>, elements: Vec<Multivector>) -> Result<Self> {
        for b in &elements {
            if !b.same_algebra(&Multivector::zero(sig)) {
                return Err(Error::IncompatibleAlgebras(
                    b.signature().to_string(),
                    sig.to_string(),
                ));
            }
            if b.homogeneous_grade() != Some(2) {
                return Err(Error::NotABivector);
            }
        }
        let masks = bivector_masks(sig);
        let d = elements.len();
        let mut coeffs = DMatrix::zeros(masks.len(), d);
        for (j, b) in elements.iter().enumerate() {
            coeffs.set_column(j, &coefficient_column(b, &masks));
        }
        if d > 0 {
            let ns = linalg::nullspace(&coeffs, 1e-12);
            if ns.rank < d {
                return Err(Error::NotASubalgebra(format!(
                    "bivector basis is linearly dependent (rank {} < {d})",
                    ns.rank
                )));
            }
        }
        let solver = linalg::SpanSolver::new(coeffs);
        let mut structure = vec![0.0; d * d * d];
        for i in 0..d {
            for j in 0..d {
                let br = elements[i].commutator_half(&elements[j])?;
                let target = coefficient_column(&br, &masks);
                let (c, residual) = solver.solve(&target);
                let scale = elements[i].norm() * elements[j].norm();
                if residual > CLOSURE_TOL * scale.max(1.0) {
                    return Err(Error::NotASubalgebra(format!(
                        "bracket of basis elements {i},{j} leaves the span (residual {residual:e})"
                    )));
                }
                for k in 0..d {
                    structure[(i * d + j) * d + k] = c[k];
                }
            }
        }
        let mut out = Self {
            sig: Arc::clone(sig),
            basis: elements,
            solver: Arc::new(solver),
            structure,
            killing: DMatrix::zeros(d, d),
        };
        out.killing = out.compute_killing();
        Ok(out)
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Multivector] {
        &self.basis
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> f64 {
        let d = self.dim();
        self.structure[(i * d + j) * d + k]
    }

    /// Nested `c[i][j][k]`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<f64>>> {
        let d = self.dim();
        (0..d)
            .map(|i| (0..d).map(|j| (0..d).map(|k| self.c(i, j, k)).collect()).collect())
            .collect()
    }

    pub fn killing(&self) -> &DMatrix<f64> {
        &self.killing
    }

    /// Matrix of `ad B_i` in this basis: column `l` holds `[B_i, B_l]`.
    pub fn ad(&self, i: usize) -> DMatrix<f64> {
        let d = self.dim();
        DMatrix::from_fn(d, d, |k, l| self.c(i, l, k))
    }

    /// `ad X` for `X = Σ x_i B_i`.
    pub fn ad_of(&self, x: &[f64]) -> DMatrix<f64> {
        let d = self.dim();
        DMatrix::from_fn(d, d, |k, l| (0..d).map(|i| x[i] * self.c(i, l, k)).sum())
    }

    /// Bracket in coordinates.
    pub fn bracket_coords(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let d = self.dim();
        let mut out = vec![0.0; d];
        for i in 0..d {
            for j in 0..d {
                let w = x[i] * y[j];
                if w != 0.0 {
                    for (k, o) in out.iter_mut().enumerate() {
                        *o += w * self.c(i, j, k);
                    }
                }
            }
        }
        out
    }

    fn compute_killing(&self) -> DMatrix<f64> {
        let d = self.dim();
        let ads: Vec<_> = (0..d).map(|i| self.ad(i)).collect();
        DMatrix::from_fn(d, d, |i, j| (&ads[i] * &ads[j]).trace())
    }

    /// Coordinates of a bivector in this basis, with the span residual.
    pub fn coordinates(&self, b: &Multivector) -> (Vec<f64>, f64) {
        let masks = bivector_masks(&self.sig);
        let (c, r) = self.solver.solve(&coefficient_column(b, &masks));
        (c.iter().copied().collect(), r)
    }

    /// Largest `|[[Bi,Bj],Bk] + [[Bj,Bk],Bi] + [[Bk,Bi],Bj]|` coefficient.
    pub fn jacobi_residual(&self) -> f64 {
        let d = self.dim();
        let mut worst = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for m in 0..d {
                        let mut s = 0.0;
                        for l in 0..d {
                            s += self.c(i, j, l) * self.c(l, k, m)
                                + self.c(j, k, l) * self.c(l, i, m)
                                + self.c(k, i, l) * self.c(l, j, m);
                        }
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }

    /// Largest `|c_ijk + c_jik|`.
    pub fn antisymmetry_residual(&self) -> f64 {
        let d = self.dim();
        let mut worst = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    worst = worst.max((self.c(i, j, k) + self.c(j, i, k)).abs());
                }
            }
        }
        worst
    }

    pub fn killing_asymmetry(&self) -> f64 {
        (&self.killing - self.killing.transpose()).amax()
    }
}

/// Isometry algebra `so(p,q)` of a signature: all coordinate bivectors
/// `e_i e_j` with `i < j`.
pub fn isometry_algebra(sig: &Arc<Signature>) -> LieAlgebraPresentation {
    let basis = bivector_masks(sig)
        .into_iter()
        .map(|m| Multivector::blade(sig, Blade(m), 1.0))
        .collect();
    LieAlgebraPresentation::from_basis(sig, basis).expect("coordinate bivectors close")
}

/// Infinitesimal action `[B, x]` of a bivector on a multivector.
pub fn act(b: &Multivector, x: &Multivector) -> Result<Multivector> {
    if b.homogeneous_grade() != Some(2) && !b.is_zero() {
        return Err(Error::NotABivector);
    }
    b.commutator_half(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraName {
    So21,
    So3,
    E2,
    /// Two translations and a boost: the Poincaré algebra of 1+1 dimensions.
    P11,
    So31,
    So4,
    So22,
    So41,
    So32,
    Unknown,
}

impl AlgebraName {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::So21 => "so(2,1)",
            Self::So3 => "so(3)",
            Self::E2 => "e(2)",
            Self::P11 => "p(1,1)",
            Self::So31 => "so(3,1)",
            Self::So4 => "so(4)",
            Self::So22 => "so(2,2)",
            Self::So41 => "so(4,1)",
            Self::So32 => "so(3,2)",
            Self::Unknown => "unknown",
        }
    }
}

impl fmt::Display for AlgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Invariant fingerprint of a presentation and the name it maps to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationLabel {
    pub name: AlgebraName,
    pub dim: usize,
    pub killing_rank: usize,
    /// `(positive, negative, zero)` eigenvalue counts of the Killing form.
    pub killing_signature: (usize, usize, usize),
}

/// Classifies by `(dim, Killing rank, Killing inertia)`.
///
/// Semisimple rows follow from the Killing form of `so(p,q)` being negative
/// on the compact part `so(p) ⊕ so(q)` and positive on the `p·q` boosts:
///
/// | dim | inertia     | name    |
/// |-----|-------------|---------|
/// | 3   | (2,1,0)     | so(2,1) |
/// | 3   | (0,3,0)     | so(3)   |
/// | 6   | (3,3,0)     | so(3,1) |
/// | 6   | (4,2,0)     | so(2,2) |
/// | 6   | (0,6,0)     | so(4)   |
/// | 10  | (4,6,0)     | so(4,1) |
/// | 10  | (6,4,0)     | so(3,2) |
///
/// Three-dimensional algebras with a rank-one Killing form are accepted as
/// `e(2)` or `p(1,1)` only when the Killing kernel is a two-dimensional
/// abelian ideal; the non-nilpotent generator then acts on it with
/// imaginary eigenvalues (rotation, inertia `(0,1,2)`) for `e(2)` or real
/// ones (boost, inertia `(1,0,2)`) for `p(1,1)`.
pub fn classify(algebra: &LieAlgebraPresentation) -> ClassificationLabel {
    let dim = algebra.dim();
    let killing_signature = linalg::inertia(algebra.killing(), KILLING_ZERO_REL);
    let killing_rank = killing_signature.0 + killing_signature.1;
    let name = match (dim, killing_rank, killing_signature) {
        (3, 3, (2, 1, 0)) => AlgebraName::So21,
        (3, 3, (0, 3, 0)) => AlgebraName::So3,
        (3, 1, (0, 1, 2)) if solvable_kind(algebra) == Some(Motion::Elliptic) => AlgebraName::E2,
        (3, 1, (1, 0, 2)) if solvable_kind(algebra) == Some(Motion::Hyperbolic) => AlgebraName::P11,
        (6, 6, (3, 3, 0)) => AlgebraName::So31,
        (6, 6, (4, 2, 0)) => AlgebraName::So22,
        (6, 6, (0, 6, 0)) => AlgebraName::So4,
        (10, 10, (4, 6, 0)) => AlgebraName::So41,
        (10, 10, (6, 4, 0)) => AlgebraName::So32,
        _ => AlgebraName::Unknown,
    };
    ClassificationLabel {
        name,
        dim,
        killing_rank,
        killing_signature,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Motion {
    Elliptic,
    Hyperbolic,
}

/// For a 3-dimensional algebra whose Killing kernel `N` is a 2-dimensional
/// abelian ideal, reports how a generator outside `N` acts on it.
fn solvable_kind(algebra: &LieAlgebraPresentation) -> Option<Motion> {
    let k = algebra.killing();
    let eig = k.clone().symmetric_eigen();
    let scale = eig.eigenvalues.amax();
    if scale == 0.0 {
        return None;
    }
    let (mut generator, mut kernel) = (None, Vec::new());
    for i in 0..3 {
        let v: Vec<f64> = eig.eigenvectors.column(i).iter().copied().collect();
        if eig.eigenvalues[i].abs() <= KILLING_ZERO_REL * scale {
            kernel.push(v);
        } else {
            generator = Some(v);
        }
    }
    let generator = generator?;
    if kernel.len() != 2 {
        return None;
    }
    let coord_scale = algebra.ad(0).amax().max(algebra.ad(1).amax()).max(algebra.ad(2).amax());
    let tol = 1e-9 * coord_scale.max(1.0);
    // Abelian: [n1, n2] = 0.
    let b = algebra.bracket_coords(&kernel[0], &kernel[1]);
    if b.iter().any(|x| x.abs() > tol) {
        return None;
    }
    // Ideal: [x, n] has no component along the generator direction.
    for n in &kernel {
        for i in 0..3 {
            let mut e = vec![0.0; 3];
            e[i] = 1.0;
            let br = algebra.bracket_coords(&e, n);
            let along: f64 = br.iter().zip(&generator).map(|(a, b)| a * b).sum();
            if along.abs() > tol {
                return None;
            }
        }
    }
    let ev = algebra.ad_of(&generator).complex_eigenvalues();
    let nonzero: Vec<_> = ev.iter().filter(|z| z.norm() > tol).collect();
    if nonzero.len() != 2 {
        return None;
    }
    if nonzero.iter().all(|z| z.re.abs() <= tol && z.im.abs() > tol) {
        Some(Motion::Elliptic)
    } else if nonzero.iter().all(|z| z.im.abs() <= tol && z.re.abs() > tol) {
        Some(Motion::Hyperbolic)
    } else {
        None
    }
}

/// Stabilizer subalgebra of a fixed multivector.
#[derive(Clone, Debug)]
pub struct StabilizerResult {
    pub fixed: Multivector,
    pub algebra: LieAlgebraPresentation,
    pub label: ClassificationLabel,
    /// Rank of `B ↦ [B, fixed]` on the ambient algebra.
    pub rank: usize,
    pub ambient_dim: usize,
}

impl StabilizerResult {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// Solves `[B, fixed] = 0` over the span of `algebra` with the default rank
/// threshold.
pub fn stabilizer_of(fixed: &Multivector, algebra: &LieAlgebraPresentation) -> Result<StabilizerResult> {
    stabilizer_of_with_tol(fixed, algebra, DEFAULT_RANK_TOL)
}

/// As [`stabilizer_of`], with singular values `<= rank_tol * σ_max` treated
/// as zero. The nullspace is returned in a canonical orthonormal basis
/// (row-echelon pivots in ambient-basis order, then Gram-Schmidt).
pub fn stabilizer_of_with_tol(
    fixed: &Multivector,
    algebra: &LieAlgebraPresentation,
    rank_tol: f64,
) -> Result<StabilizerResult> {
    if !fixed.same_algebra(&Multivector::zero(algebra.signature())) {
        return Err(Error::IncompatibleAlgebras(
            fixed.signature().to_string(),
            algebra.signature().to_string(),
        ));
    }
    let fixed = fixed.normalized();
    if fixed.is_zero() {
        return Err(Error::ZeroFixed);
    }
    let Some(grade) = fixed.homogeneous_grade() else {
        return Err(Error::ExpectedGrade(fixed.grades()[0]));
    };
    let sig = algebra.signature();
    let masks: Vec<u8> = (0..sig.blade_count())
        .map(|m| m as u8)
        .filter(|m| Blade(*m).grade() == grade)
        .collect();
    let d = algebra.dim();
    let mut a = DMatrix::zeros(masks.len(), d);
    for (j, b) in algebra.basis().iter().enumerate() {
        a.set_column(j, &coefficient_column(&act(b, &fixed)?, &masks));
    }
    let ns = linalg::nullspace(&a, rank_tol);
    let canonical = if ns.basis.ncols() > 0 {
        linalg::canonical_basis(&ns.basis)
    } else {
        ns.basis.clone()
    };
    let elements: Vec<Multivector> = (0..canonical.ncols())
        .map(|c| {
            let mut mv = Multivector::zero(sig);
            for (i, b) in algebra.basis().iter().enumerate() {
                let w = canonical[(i, c)];
                if w != 0.0 {
                    mv += &b.scale(w);
                }
            }
            mv.normalized()
        })
        .collect();
    let stab = LieAlgebraPresentation::from_basis(sig, elements)?;
    let label = classify(&stab);
    Ok(StabilizerResult {
        fixed,
        algebra: stab,
        label,
        rank: ns.rank,
        ambient_dim: d,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Isomorphic,
    Distinct,
    Undecided,
}

impl Comparison {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Isomorphic => "isomorphic",
            Self::Distinct => "distinct",
            Self::Undecided => "undecided",
        }
    }
}

/// Invariant-based comparison: equal known labels are isomorphic, different
/// known labels are distinct, anything involving `unknown` is undecided.
pub fn compare_little_algebras(a: &StabilizerResult, b: &StabilizerResult) -> Comparison {
    match (a.label.name, b.label.name) {
        (AlgebraName::Unknown, _) | (_, AlgebraName::Unknown) => Comparison::Undecided,
        (x, y) if x == y => Comparison::Isomorphic,
        _ => Comparison::Distinct,
    }
}

/// Split of a conformal-model bivector over the mixed basis
/// `{e_i ∧ inf, e_i ∧ O, e_i ∧ e_j, O ∧ inf}`.
#[derive(Clone, Debug)]
pub struct InfinityDecomposition {
    /// `Σ t_i e_i ∧ inf`: translation generators.
    pub translation_part: Multivector,
    /// `Σ u_i e_i ∧ O`: tangent vectors at the origin.
    pub tangent_part: Multivector,
    /// `e_i ∧ e_j` and `O ∧ inf` terms.
    pub remainder: Multivector,
    pub translation_coeffs: Vec<f64>,
    pub tangent_coeffs: Vec<f64>,
}

/// With `e_i e+` and `e_i e-` coefficients `a+`, `a-`, the tangent
/// coefficient is `(a+ + a-)/√2` and the translation coefficient is
/// `(a- - a+)/√2`.
pub fn decompose_infinity_generator(
    model: &ConformalModel,
    b: &Multivector,
) -> Result<InfinityDecomposition> {
    let sig = model.signature();
    if !b.same_algebra(model.origin()) {
        return Err(Error::IncompatibleAlgebras(
            b.signature().to_string(),
            sig.to_string(),
        ));
    }
    if !b.is_zero() && b.homogeneous_grade() != Some(2) {
        return Err(Error::NotABivector);
    }
    let n = model.target_dim();
    let (ip, im) = (n, n + 1);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut translation = Multivector::zero(sig);
    let mut tangent = Multivector::zero(sig);
    let mut tcoef = Vec::with_capacity(n);
    let mut ucoef = Vec::with_capacity(n);
    for i in 0..n {
        let ap = b.coefficient(Blade((1 << i) | (1 << ip)));
        let am = b.coefficient(Blade((1 << i) | (1 << im)));
        let u = (ap + am) * h;
        let t = (am - ap) * h;
        let ei = Multivector::basis(sig, i);
        translation += &ei.outer_product(model.infinity())?.scale(t);
        tangent += &ei.outer_product(model.origin())?.scale(u);
        tcoef.push(t);
        ucoef.push(u);
    }
    let remainder = Multivector::from_terms(
        sig,
        b.terms().filter(|(bl, _)| {
            let m = bl.0;
            let touches_null = m & ((1 << ip) | (1 << im));
            touches_null == 0 || touches_null == (1 << ip) | (1 << im)
        }),
    );
    Ok(InfinityDecomposition {
        translation_part: translation,
        tangent_part: tangent,
        remainder,
        translation_coeffs: tcoef,
        tangent_coeffs: ucoef,
    })
}
