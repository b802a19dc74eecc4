//! Truncated unitary representations of so(2,1) in the weight basis.
//!
//! With Casimir value `q`, the ladder operators act as
//!
//! ```text
//! S+|m> = sqrt(m(m+1) - q) |m+1>,   S-|m> = sqrt(m(m-1) - q) |m-1>,   S3|m> = m|m>
//! ```
//!
//! and `S1 = (S+ + S-)/2`, `S2 = (S+ - S-)/(2i)`, `Q = S3² - S1² - S2²`.
//! These Hermitian operators satisfy `[S1,S2] = -iS3`, `[S3,S1] = iS2`,
//! `[S2,S3] = iS1`.
//!
//! # Hermitization
//!
//! The bivectors `S1 = e-e1`, `S2 = e-e2`, `S3 = e1e2` fixing `e+` satisfy
//! `[S1,S2] = S3`, `[S3,S1] = -S2`, `[S2,S3] = -S1` under the half
//! commutator. The map `ρ(Sj) = i·Ŝj` (geometric generator to `i` times the
//! Hermitian matrix) is a Lie homomorphism:
//! `[ρS1, ρS2] = -[Ŝ1, Ŝ2] = iŜ3 = ρS3`, and likewise for the other pairs.
//! [`hermitization_residual`] checks this against the stabilizer computed
//! in [`crate::little_groups`].

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ga::Multivector;
use crate::little_groups::StabilizerResult;
use crate::linalg;

/// Radicands down to this value are clipped to zero.
pub const RADICAND_TOL: f64 = 1e-12;

/// Rows and columns this close to a truncation edge are outside the
/// interior.
pub const EDGE_DEPTH: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RepLabel {
    /// Weights `m ∈ ε + Z`, `q = -(1/4 + s²)`.
    Principal { s: f64, eps: f64 },
    /// Lowest weight `k + 1`, `q = k(k+1)`.
    DiscretePlus { k: f64 },
    /// Highest weight `-(k + 1)`, `q = k(k+1)`.
    DiscreteMinus { k: f64 },
}

impl RepLabel {
    pub fn principal(s: f64, eps: f64) -> Result<Self> {
        let label = Self::Principal { s, eps };
        label.validate()?;
        Ok(label)
    }

    pub fn discrete_plus(k: f64) -> Result<Self> {
        let label = Self::DiscretePlus { k };
        label.validate()?;
        Ok(label)
    }

    pub fn discrete_minus(k: f64) -> Result<Self> {
        let label = Self::DiscreteMinus { k };
        label.validate()?;
        Ok(label)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Principal { s, eps } => {
                if !(s.is_finite() && s >= 0.0) {
                    return Err(Error::InvalidLabel(format!("principal series needs s >= 0, got {s}")));
                }
                if eps != 0.0 && eps != 0.5 {
                    return Err(Error::InvalidLabel(format!("eps must be 0 or 0.5, got {eps}")));
                }
            }
            Self::DiscretePlus { k } | Self::DiscreteMinus { k } => {
                if !(k.is_finite() && k > 0.0) {
                    return Err(Error::InvalidLabel(format!("discrete series needs k > 0, got {k}")));
                }
            }
        }
        Ok(())
    }

    pub fn series_name(&self) -> &'static str {
        match self {
            Self::Principal { .. } => "principal",
            Self::DiscretePlus { .. } => "discrete-plus",
            Self::DiscreteMinus { .. } => "discrete-minus",
        }
    }

    pub fn casimir_q(&self) -> f64 {
        match *self {
            Self::Principal { s, .. } => -(0.25 + s * s),
            Self::DiscretePlus { k } | Self::DiscreteMinus { k } => k * (k + 1.0),
        }
    }

    /// Default weight band for half-width `m`: `-M..=M` for `ε = 0`,
    /// `-(M-½)..=(M-½)` for `ε = ½`, and `2M+1` weights starting at
    /// `±(k+1)` for the discrete series.
    pub fn weights(&self, half_width: usize) -> Vec<f64> {
        let w = half_width as i64;
        match *self {
            Self::Principal { eps, .. } if eps == 0.0 => (-w..=w).map(|m| m as f64).collect(),
            Self::Principal { .. } => (-w..w).map(|m| m as f64 + 0.5).collect(),
            Self::DiscretePlus { k } => (0..=2 * w).map(|n| k + 1.0 + n as f64).collect(),
            Self::DiscreteMinus { k } => (0..=2 * w).rev().map(|n| -(k + 1.0 + n as f64)).collect(),
        }
    }

    /// Whether the full weight set is unbounded in both directions.
    pub fn two_sided(&self) -> bool {
        matches!(self, Self::Principal { .. })
    }
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Principal { s, eps } => write!(f, "principal(s={s:?}, eps={eps:?})"),
            Self::DiscretePlus { k } => write!(f, "discrete-plus(k={k:?})"),
            Self::DiscreteMinus { k } => write!(f, "discrete-minus(k={k:?})"),
        }
    }
}

pub fn two_sided_spectrum_check(label: &RepLabel) -> bool {
    label.two_sided()
}

/// Finite section of a representation on a contiguous weight band, in
/// ascending weight order.
#[derive(Clone, Debug)]
pub struct TruncatedRep {
    pub label: RepLabel,
    pub half_width: usize,
    pub weights: Vec<f64>,
    pub s3: DMatrix<f64>,
    pub splus: DMatrix<f64>,
    pub sminus: DMatrix<f64>,
    pub s1: DMatrix<Complex64>,
    pub s2: DMatrix<Complex64>,
    pub casimir: DMatrix<Complex64>,
    lower_exact: bool,
    upper_exact: bool,
}

/// Builds the representation on the default band of half-width `half_width`.
pub fn build_rep(label: RepLabel, half_width: usize) -> Result<TruncatedRep> {
    label.validate()?;
    if half_width < 2 {
        return Err(Error::InvalidTruncation(half_width));
    }
    let weights = label.weights(half_width);
    let mut rep = build_on_weights(label, &weights)?;
    rep.half_width = half_width;
    Ok(rep)
}

/// Builds on an explicit ascending band `m_min, m_min + 1, ...` of `len`
/// weights. Fails if a ladder radicand inside the band is negative.
pub fn build_on_band(label: RepLabel, m_min: f64, len: usize) -> Result<TruncatedRep> {
    label.validate()?;
    if len < 2 * EDGE_DEPTH + 1 {
        return Err(Error::InvalidTruncation(len / 2));
    }
    let weights: Vec<f64> = (0..len).map(|n| m_min + n as f64).collect();
    build_on_weights(label, &weights)
}

fn radicand(m: f64, next: f64, q: f64) -> Result<f64> {
    let r = m * next - q;
    if r < -RADICAND_TOL {
        return Err(Error::OutsideUnitarity { m, radicand: r });
    }
    Ok(r.max(0.0))
}

fn build_on_weights(label: RepLabel, weights: &[f64]) -> Result<TruncatedRep> {
    let n = weights.len();
    let q = label.casimir_q();
    let s3 = DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(weights));
    let mut splus = DMatrix::zeros(n, n);
    let mut sminus = DMatrix::zeros(n, n);
    for (j, &m) in weights.iter().enumerate() {
        if j + 1 < n {
            splus[(j + 1, j)] = radicand(m, m + 1.0, q)?.sqrt();
        }
        if j > 0 {
            sminus[(j - 1, j)] = radicand(m, m - 1.0, q)?.sqrt();
        }
    }
    let c = |m: &DMatrix<f64>| m.map(|x| Complex64::new(x, 0.0));
    let (sp, sm) = (c(&splus), c(&sminus));
    let s1 = (&sp + &sm) * Complex64::new(0.5, 0.0);
    let s2 = (&sp - &sm) * Complex64::new(0.0, -0.5);
    let s3c = c(&s3);
    let casimir = &s3c * &s3c - &s1 * &s1 - &s2 * &s2;

    // A band edge is exact when the ladder operator leaving it vanishes.
    let terminates = |m: f64, next: f64| (m * next - q).abs() <= RADICAND_TOL * (1.0 + q.abs());
    let lower_exact = terminates(weights[0], weights[0] - 1.0);
    let upper_exact = terminates(weights[n - 1], weights[n - 1] + 1.0);
    Ok(TruncatedRep {
        label,
        half_width: n / 2,
        weights: weights.to_vec(),
        s3,
        splus,
        sminus,
        s1,
        s2,
        casimir,
        lower_exact,
        upper_exact,
    })
}

/// Residual of one identity, on the interior block and on the full matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Residual {
    pub interior: f64,
    pub full: f64,
}

impl Residual {
    fn of(m: &DMatrix<Complex64>, range: std::ops::Range<usize>) -> Self {
        let full = m.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let mut interior = 0.0f64;
        for i in range.clone() {
            for j in range.clone() {
                interior = interior.max(m[(i, j)].norm());
            }
        }
        Self { interior, full }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CommutatorReport {
    /// `[S3, S+] - S+`.
    pub s3_splus: Residual,
    /// `[S3, S-] + S-`.
    pub s3_sminus: Residual,
    /// `[S+, S-] + 2 S3`.
    pub splus_sminus: Residual,
}

impl CommutatorReport {
    pub fn max_interior(&self) -> f64 {
        self.s3_splus.interior.max(self.s3_sminus.interior).max(self.splus_sminus.interior)
    }

    pub fn max_full(&self) -> f64 {
        self.s3_splus.full.max(self.s3_sminus.full).max(self.splus_sminus.full)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CasimirReport {
    pub q: f64,
    /// Largest `|Q_ii - q|` over the interior.
    pub diagonal: f64,
    /// Largest interior off-diagonal `|Q_ij|`.
    pub off_diagonal: f64,
    /// Largest `|Q_ii - q|` over the whole band, edges included.
    pub full_diagonal: f64,
}

impl CasimirReport {
    pub fn max_interior(&self) -> f64 {
        self.diagonal.max(self.off_diagonal)
    }
}

impl TruncatedRep {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Index range at depth `>= EDGE_DEPTH` from each truncation edge.
    /// Band edges where the ladder terminates are exact and not trimmed.
    pub fn interior(&self) -> std::ops::Range<usize> {
        let n = self.dim();
        let lo = if self.lower_exact { 0 } else { EDGE_DEPTH };
        let hi = if self.upper_exact { n } else { n.saturating_sub(EDGE_DEPTH) };
        lo..hi.max(lo)
    }

    pub fn s3_complex(&self) -> DMatrix<Complex64> {
        self.s3.map(|x| Complex64::new(x, 0.0))
    }

    /// Hermitian generators `[S1, S2, S3]`.
    pub fn hermitian_generators(&self) -> [DMatrix<Complex64>; 3] {
        [self.s1.clone(), self.s2.clone(), self.s3_complex()]
    }

    pub fn check_commutators(&self) -> CommutatorReport {
        let c = |m: &DMatrix<f64>| m.map(|x| Complex64::new(x, 0.0));
        let r = self.interior();
        let (s3, sp, sm) = (&self.s3, &self.splus, &self.sminus);
        CommutatorReport {
            s3_splus: Residual::of(&c(&(real_commutator(s3, sp) - sp)), r.clone()),
            s3_sminus: Residual::of(&c(&(real_commutator(s3, sm) + sm)), r.clone()),
            splus_sminus: Residual::of(&c(&(real_commutator(sp, sm) + s3 * 2.0)), r),
        }
    }

    pub fn check_casimir(&self) -> CasimirReport {
        let q = self.label.casimir_q();
        let r = self.interior();
        let mut diagonal = 0.0f64;
        let mut off_diagonal = 0.0f64;
        for i in r.clone() {
            for j in r.clone() {
                let z = self.casimir[(i, j)];
                if i == j {
                    diagonal = diagonal.max((z - q).norm());
                } else {
                    off_diagonal = off_diagonal.max(z.norm());
                }
            }
        }
        let full_diagonal = (0..self.dim())
            .map(|i| (self.casimir[(i, i)] - q).norm())
            .fold(0.0, f64::max);
        CasimirReport {
            q,
            diagonal,
            off_diagonal,
            full_diagonal,
        }
    }

    /// Largest interior entry of `[Q, Si]` over `i = 1, 2, 3`.
    pub fn casimir_commutator_residual(&self) -> f64 {
        let r = self.interior();
        self.hermitian_generators()
            .iter()
            .map(|s| Residual::of(&complex_commutator(&self.casimir, s), r.clone()).interior)
            .fold(0.0, f64::max)
    }

    /// Largest `|A - A†|` entry over S1, S2, S3 on the interior.
    pub fn hermiticity_residual(&self) -> f64 {
        let r = self.interior();
        self.hermitian_generators()
            .iter()
            .map(|s| Residual::of(&(s - s.adjoint()), r.clone()).interior)
            .fold(0.0, f64::max)
    }

    /// Structure constants `f[a][b][c]` with `[ρa, ρb] = Σ_c f_abc ρc` for
    /// `ρj = i·Ŝj`, fitted on the interior block. Also returns the fit
    /// residual and the largest imaginary part encountered.
    pub fn measured_structure_constants(&self) -> MeasuredConstants {
        let r = self.interior();
        let i = Complex64::new(0.0, 1.0);
        let rho: Vec<DMatrix<Complex64>> =
            self.hermitian_generators().into_iter().map(|s| s * i).collect();
        let flat = |m: &DMatrix<Complex64>| -> Vec<Complex64> {
            let mut v = Vec::new();
            for a in r.clone() {
                for b in r.clone() {
                    v.push(m[(a, b)]);
                }
            }
            v
        };
        let cols: Vec<Vec<Complex64>> = rho.iter().map(flat).collect();
        let len = cols[0].len();
        let basis = DMatrix::from_fn(len, 3, |row, c| cols[c][row]);
        let svd = basis.clone().svd(true, true);
        let mut f = [[[0.0; 3]; 3]; 3];
        let (mut residual, mut imag) = (0.0f64, 0.0f64);
        for a in 0..3 {
            for b in 0..3 {
                let comm = complex_commutator(&rho[a], &rho[b]);
                let target = nalgebra::DVector::from_vec(flat(&comm));
                let x = svd.solve(&target, 1e-14).expect("U and V^T were requested");
                residual = residual.max((&basis * &x - &target).iter().map(|z| z.norm()).fold(0.0, f64::max));
                for c in 0..3 {
                    f[a][b][c] = x[c].re;
                    imag = imag.max(x[c].im.abs());
                }
            }
        }
        MeasuredConstants { f, residual, imag }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct MeasuredConstants {
    pub f: [[[f64; 3]; 3]; 3],
    pub residual: f64,
    pub imag: f64,
}

fn real_commutator(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a * b - b * a
}

fn complex_commutator(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    a * b - b * a
}

/// Geometric structure constants of `generators` (three bivectors in the
/// span of `stabilizer`), obtained by changing basis from the stabilizer's
/// own constants. Returns the constants and the largest span residual.
pub fn stabilizer_constants_in(
    stabilizer: &StabilizerResult,
    generators: &[Multivector; 3],
) -> Result<([[[f64; 3]; 3]; 3], f64)> {
    let alg = &stabilizer.algebra;
    if alg.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            got: alg.dim(),
        });
    }
    let mut t = DMatrix::zeros(3, 3);
    let mut span = 0.0f64;
    for (a, g) in generators.iter().enumerate() {
        let (coords, r) = alg.coordinates(g);
        span = span.max(r);
        for i in 0..3 {
            t[(a, i)] = coords[i];
        }
    }
    let tinv = t.clone().try_inverse().ok_or_else(|| {
        Error::NotASubalgebra("generators are linearly dependent".into())
    })?;
    let mut out = [[[0.0; 3]; 3]; 3];
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let mut s = 0.0;
                for i in 0..3 {
                    for j in 0..3 {
                        for l in 0..3 {
                            s += t[(a, i)] * t[(b, j)] * alg.c(i, j, l) * tinv[(l, c)];
                        }
                    }
                }
                out[a][b][c] = s;
            }
        }
    }
    Ok((out, span))
}

/// Largest difference between the structure constants measured on `rep`
/// under `ρ(Sj) = i·Ŝj` and those of `generators` inside `stabilizer`.
/// Generators are matched by position: `[S1, S2, S3]`.
pub fn hermitization_residual(
    rep: &TruncatedRep,
    stabilizer: &StabilizerResult,
    generators: &[Multivector; 3],
) -> Result<f64> {
    let (geo, span) = stabilizer_constants_in(stabilizer, generators)?;
    let m = rep.measured_structure_constants();
    let mut worst = span.max(m.residual).max(m.imag);
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                worst = worst.max((geo[a][b][c] - m.f[a][b][c]).abs());
            }
        }
    }
    Ok(worst)
}

/// Smallest principal-series ladder radicand `m(m+1) - q` over
/// `|m| <= m_max`, together with the largest deviation from the closed form
/// `(m + ½)² + s²`.
pub fn principal_radicand_scan(s: f64, eps: f64, m_max: i64) -> (f64, f64) {
    let q = -(0.25 + s * s);
    let mut min = f64::INFINITY;
    let mut dev = 0.0f64;
    for n in -m_max..=m_max {
        let m = n as f64 + eps;
        let r = m * (m + 1.0) - q;
        let closed = (m + 0.5) * (m + 0.5) + s * s;
        min = min.min(r);
        dev = dev.max((r - closed).abs() / closed.max(1.0));
    }
    (min, dev)
}

/// Eigenvalues of the interior block of `Q` (Hermitian up to rounding).
pub fn interior_casimir_spectrum(rep: &TruncatedRep) -> Vec<f64> {
    let r = rep.interior();
    let n = r.len();
    let block = DMatrix::from_fn(n, n, |i, j| rep.casimir[(r.start + i, r.start + j)].re);
    linalg::symmetric_eigenvalues(&block)
}
