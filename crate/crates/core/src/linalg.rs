//! Dense linear-algebra helpers on top of nalgebra: rank-revealing
//! nullspaces, span coordinates and canonical bases.

use nalgebra::{DMatrix, DVector};

/// Nullspace of `a` from a full SVD, keeping right singular vectors whose
/// singular value is `<= rel_tol * σ_max`.
#[derive(Clone, Debug)]
pub struct Nullspace {
    /// Columns form an orthonormal basis of the nullspace.
    pub basis: DMatrix<f64>,
    pub rank: usize,
    pub singular_values: Vec<f64>,
}

pub fn nullspace(a: &DMatrix<f64>, rel_tol: f64) -> Nullspace {
    let cols = a.ncols();
    // Pad with zero rows so that the SVD returns a full V.
    let rows = a.nrows().max(cols);
    let mut padded = DMatrix::zeros(rows, cols);
    padded.view_mut((0, 0), (a.nrows(), cols)).copy_from(a);
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let sv: Vec<f64> = svd.singular_values.iter().copied().collect();
    let smax = sv.iter().fold(0.0f64, |m, s| m.max(*s));
    let cutoff = rel_tol * smax;
    let null_rows: Vec<usize> = (0..sv.len())
        .filter(|&i| smax == 0.0 || sv[i] <= cutoff)
        .collect();
    let rank = sv.len() - null_rows.len();
    let mut basis = DMatrix::zeros(cols, null_rows.len());
    for (j, &i) in null_rows.iter().enumerate() {
        basis.set_column(j, &v_t.row(i).transpose());
    }
    let mut singular_values = sv;
    singular_values.sort_by(|a, b| b.total_cmp(a));
    Nullspace {
        basis,
        rank,
        singular_values,
    }
}

/// Least-squares coordinates of `target` in the column span of `basis`,
/// with the residual norm `|basis * coords - target|`.
pub fn span_coordinates(basis: &DMatrix<f64>, target: &DVector<f64>) -> (DVector<f64>, f64) {
    SpanSolver::new(basis.clone()).solve(target)
}

/// Factor once, then solve [`span_coordinates`] for many targets.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    basis: DMatrix<f64>,
    pinv: DMatrix<f64>,
}

impl SpanSolver {
    pub fn new(basis: DMatrix<f64>) -> Self {
        let pinv = if basis.ncols() == 0 {
            DMatrix::zeros(0, basis.nrows())
        } else {
            basis.clone().pseudo_inverse(1e-14).expect("tolerance is non-negative")
        };
        Self { basis, pinv }
    }

    pub fn solve(&self, target: &DVector<f64>) -> (DVector<f64>, f64) {
        let coords = &self.pinv * target;
        let residual = (&self.basis * &coords - target).norm();
        (coords, residual)
    }
}

/// Canonical orthonormal basis for the span of the columns of `n`:
/// reduced row echelon form (pivots chosen left to right) followed by
/// Gram-Schmidt in pivot order. Entries below `1e-13` are cleared.
pub fn canonical_basis(n: &DMatrix<f64>) -> DMatrix<f64> {
    let d = n.ncols();
    let k = n.nrows();
    let mut rows = n.transpose();
    let mut r = 0;
    for c in 0..k {
        if r == d {
            break;
        }
        let (piv, val) = (r..d)
            .map(|i| (i, rows[(i, c)].abs()))
            .fold((r, -1.0), |best, x| if x.1 > best.1 { x } else { best });
        if val <= 1e-9 {
            continue;
        }
        rows.swap_rows(r, piv);
        let p = rows[(r, c)];
        for j in 0..k {
            rows[(r, j)] /= p;
        }
        for i in 0..d {
            if i != r {
                let f = rows[(i, c)];
                if f != 0.0 {
                    for j in 0..k {
                        rows[(i, j)] -= f * rows[(r, j)];
                    }
                }
            }
        }
        r += 1;
    }
    let mut out = DMatrix::zeros(k, r);
    for i in 0..r {
        let mut v: DVector<f64> = rows.row(i).transpose();
        for j in 0..i {
            let u = out.column(j).clone_owned();
            let dot = u.dot(&v);
            v -= u * dot;
        }
        let norm = v.norm();
        v /= norm;
        v.iter_mut().for_each(|x| {
            if x.abs() < 1e-13 {
                *x = 0.0
            }
        });
        let norm = v.norm();
        out.set_column(i, &(v / norm));
    }
    out
}

/// Eigenvalues of a symmetric matrix, sorted descending.
pub fn symmetric_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
    let sym = (m + m.transpose()) * 0.5;
    let mut ev: Vec<f64> = sym.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix, zero meaning
/// `|λ| <= rel_tol * max|λ|` (or all eigenvalues below `1e-12`).
pub fn inertia(m: &DMatrix<f64>, rel_tol: f64) -> (usize, usize, usize) {
    let ev = symmetric_eigenvalues(m);
    let max = ev.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    let cutoff = if max < 1e-12 { f64::INFINITY } else { rel_tol * max };
    ev.iter().fold((0, 0, 0), |(p, n, z), &x| {
        if x.abs() <= cutoff {
            (p, n, z + 1)
        } else if x > 0.0 {
            (p + 1, n, z)
        } else {
            (p, n + 1, z)
        }
    })
}
