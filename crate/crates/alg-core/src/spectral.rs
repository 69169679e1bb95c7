//! Cyclic Jacobi eigensolver and the spectral identities of the
//! antisymmetric line graph: edge-space Laplacian realization, transported
//! modes, the matrix-tree identity, signed inertia, and the lower bounds on
//! the frustration index.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{AlgError, Result};
use crate::graph::{incidence_matrix, Orientation, SimpleGraph};
use crate::matrix::{bareiss_determinant, big_abs_diff, round_checked, DenseSymmetricMatrix};
use crate::opt::{maxcut_exact_with, Deadline, SearchLimits};
use crate::signed::{self, SignedGraph};

/// Eigenvalues in ascending order plus the zero threshold used to classify
/// them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub tolerance: f64,
}

/// Signature of a symmetric matrix: eigenvalue counts above, below, and
/// within the zero threshold. `uncertain` counts eigenvalues within a factor
/// of 10 of the threshold boundary, flagged rather than silently classified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    pub uncertain: usize,
}

/// Relative off-diagonal mass at which a sweep is declared converged.
const JACOBI_EPS: f64 = 1e-13;
const JACOBI_MAX_SWEEPS: usize = 100;

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations
/// with a fixed row-major sweep order. Returns ascending eigenvalues and the
/// matching orthonormal eigenvectors as columns.
pub fn symmetric_eigendecomposition(m: &DenseSymmetricMatrix) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let n = m.dim();
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    let mut a: Vec<f64> = m.raw().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let norm = m.frobenius_norm();
    let threshold = JACOBI_EPS * norm.max(f64::MIN_POSITIVE);

    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };

    let mut converged = off(&a) <= threshold;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if converged {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                a[p * n + p] -= h;
                a[q * n + q] += h;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for j in 0..n {
                    if j != p && j != q {
                        let ajp = a[j * n + p];
                        let ajq = a[j * n + q];
                        let np = ajp - s * (ajq + tau * ajp);
                        let nq = ajq + s * (ajp - tau * ajq);
                        a[j * n + p] = np;
                        a[p * n + j] = np;
                        a[j * n + q] = nq;
                        a[q * n + j] = nq;
                    }
                }
                for j in 0..n {
                    let vjp = v[j * n + p];
                    let vjq = v[j * n + q];
                    v[j * n + p] = vjp - s * (vjq + tau * vjp);
                    v[j * n + q] = vjq + s * (vjp - tau * vjq);
                }
            }
        }
        converged = off(&a) <= threshold;
    }
    if !converged {
        return Err(AlgError::Numeric(format!(
            "jacobi eigensolver did not converge in {JACOBI_MAX_SWEEPS} sweeps"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].partial_cmp(&a[j * n + j]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    let eigenvectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| (0..n).map(|row| v[row * n + col]).collect())
        .collect();
    Ok((eigenvalues, eigenvectors))
}

/// Zero threshold used for spectra: `1e-8` scaled by the Frobenius norm.
fn zero_threshold(m: &DenseSymmetricMatrix) -> f64 {
    1e-8 * m.frobenius_norm().max(1.0)
}

/// Eigenvalues of a symmetric matrix, ascending.
pub fn symmetric_eigenvalues(m: &DenseSymmetricMatrix) -> Result<Spectrum> {
    let (eigenvalues, _) = symmetric_eigendecomposition(m)?;
    Ok(Spectrum {
        eigenvalues,
        tolerance: zero_threshold(m),
    })
}

/// Largest Laplacian eigenvalue of `g` (0 for an edgeless graph).
pub fn laplacian_max_eigenvalue(g: &SimpleGraph) -> Result<f64> {
    let spec = symmetric_eigenvalues(&g.laplacian())?;
    Ok(spec.eigenvalues.last().copied().unwrap_or(0.0))
}

/// Verifies the edge-space Laplacian realization for a connected graph:
/// the nonzero spectra of `S + 2I` and of the Laplacian agree as multisets,
/// and the kernel of `S + 2I` has dimension `m - n + 1` (the cycle space).
pub fn edge_space_identity_check(g: &SimpleGraph, o: &Orientation) -> Result<bool> {
    if !g.is_connected() {
        return Err(AlgError::invalid(
            "edge-space check requires a connected graph",
        ));
    }
    let alg = signed::build_alg(g, o)?;
    let shifted = signed::signed_adjacency_matrix(&alg).shift_diagonal(2.0);
    let lap = g.laplacian();
    let edge_spec = symmetric_eigenvalues(&shifted)?;
    let lap_spec = symmetric_eigenvalues(&lap)?;
    let scale = lap_spec
        .eigenvalues
        .iter()
        .fold(1.0f64, |acc, &x| acc.max(x.abs()));
    let tol = 1e-8 * scale;

    let nonzero =
        |s: &Spectrum| -> Vec<f64> { s.eigenvalues.iter().copied().filter(|&x| x > tol).collect() };
    let a = nonzero(&edge_spec);
    let b = nonzero(&lap_spec);
    if a.len() != b.len() {
        return Ok(false);
    }
    if a.iter().zip(&b).any(|(x, y)| (x - y).abs() > tol) {
        return Ok(false);
    }
    let kernel_dim = edge_spec
        .eigenvalues
        .iter()
        .filter(|&&x| x.abs() <= tol)
        .count();
    let expected = g.edge_count() + 1 - g.vertex_count();
    Ok(kernel_dim == expected)
}

/// Verifies the transport of Laplacian modes: for every eigenpair
/// `(lambda_i, v_i)` with `i >= 2`, the edge vector `w_i = D^T v_i`
/// satisfies `S w_i = (lambda_i - 2) w_i` and `||w_i||^2 = lambda_i`, with
/// pairwise Gram residuals `<w_i, w_j> ~ lambda_i delta_ij`. Residuals for
/// degenerate eigenvalues are tested against the cluster mean.
pub fn transported_modes_check(g: &SimpleGraph, o: &Orientation) -> Result<bool> {
    if !g.is_connected() {
        return Err(AlgError::invalid(
            "mode transport requires a connected graph",
        ));
    }
    let n = g.vertex_count();
    if n <= 1 {
        return Ok(true);
    }
    let lap = g.laplacian();
    let (eigenvalues, eigenvectors) = symmetric_eigendecomposition(&lap)?;
    let d = incidence_matrix(g, o)?;
    let alg = signed::build_alg(g, o)?;
    let s = signed::signed_adjacency_matrix(&alg);
    let m = g.edge_count();
    let scale = eigenvalues.iter().fold(1.0f64, |acc, &x| acc.max(x.abs()));
    let tol = 1e-7;

    // cluster degenerate eigenvalues so residuals are checked against a
    // single representative value per eigenspace
    let mut clusters: Vec<(f64, Vec<usize>)> = Vec::new();
    for (i, &lam) in eigenvalues.iter().enumerate().skip(1) {
        match clusters.last_mut() {
            Some((rep, idxs)) if (lam - *rep).abs() <= 1e-6 * scale => idxs.push(i),
            _ => clusters.push((lam, vec![i])),
        }
    }

    let transported: Vec<(f64, Vec<f64>)> = clusters
        .iter()
        .flat_map(|(lam, idxs)| {
            idxs.iter()
                .map(|&i| (*lam, d.transpose_apply(&eigenvectors[i])))
                .collect::<Vec<_>>()
        })
        .collect();

    for (lam, w) in &transported {
        let norm2: f64 = w.iter().map(|x| x * x).sum();
        if (norm2 - lam).abs() > tol * scale.max(1.0) {
            return Ok(false);
        }
        let norm = norm2.sqrt();
        // S w - (lambda - 2) w
        let mut residual = 0.0f64;
        for i in 0..m {
            let si: f64 = w.iter().enumerate().map(|(j, &wj)| s.get(i, j) * wj).sum();
            let r = si - (lam - 2.0) * w[i];
            residual += r * r;
        }
        if residual.sqrt() > tol * norm.max(1e-12) {
            return Ok(false);
        }
    }
    // Gram residuals across distinct transported modes
    for i in 0..transported.len() {
        for j in i + 1..transported.len() {
            let dot: f64 = transported[i]
                .1
                .iter()
                .zip(&transported[j].1)
                .map(|(a, b)| a * b)
                .sum();
            if dot.abs() > tol * scale.max(1.0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Spanning tree count of a connected graph via the matrix-tree identity on
/// the antisymmetric line graph: the product of the nonzero eigenvalues of
/// `S + 2I` divided by `n`. Cross-checked against the exact integer
/// Laplacian cofactor; disagreement beyond rounding tolerance is an error.
pub fn spanning_tree_count(g: &SimpleGraph) -> Result<BigInt> {
    if !g.is_connected() {
        return Err(AlgError::invalid(
            "spanning tree count requires a connected graph",
        ));
    }
    let n = g.vertex_count();
    if n == 1 {
        return Ok(BigInt::from(1));
    }
    // exact path: any cofactor of the Laplacian
    let deg = g.degrees();
    let size = n - 1;
    let mut minor = vec![0i64; size * size];
    for i in 0..size {
        for j in 0..size {
            minor[i * size + j] = if i == j {
                deg[i + 1] as i64
            } else if g.has_edge(i + 1, j + 1) {
                -1
            } else {
                0
            };
        }
    }
    let exact = bareiss_determinant(size, &minor);

    // floating path: nonzero eigenvalues of S + 2I
    let alg = signed::build_alg(g, &Orientation::reference(g.edge_count()))?;
    let shifted = signed::signed_adjacency_matrix(&alg).shift_diagonal(2.0);
    let spec = symmetric_eigenvalues(&shifted)?;
    let product: f64 = spec
        .eigenvalues
        .iter()
        .filter(|&&x| x > spec.tolerance)
        .product();
    let estimate = product / n as f64;
    let rounded = round_checked(estimate, 1e-6)?;
    if big_abs_diff(&rounded, &exact) != BigInt::from(0) {
        return Err(AlgError::Numeric(format!(
            "matrix-tree mismatch: eigenvalue product gives {rounded}, cofactor gives {exact}"
        )));
    }
    Ok(exact)
}

/// Signed inertia of the adjacency matrix of a signed graph, at zero
/// threshold `1e-8 * ||S||`. Switching-invariant.
pub fn signed_inertia(s: &SignedGraph) -> Result<Inertia> {
    let m = signed::signed_adjacency_matrix(s);
    let spec = symmetric_eigenvalues(&m)?;
    let threshold = spec.tolerance;
    let mut inertia = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
        uncertain: 0,
    };
    for &lam in &spec.eigenvalues {
        let mag = lam.abs();
        if mag <= threshold {
            inertia.zero += 1;
        } else if lam > 0.0 {
            inertia.positive += 1;
        } else {
            inertia.negative += 1;
        }
        if mag > threshold / 10.0 && mag < threshold * 10.0 {
            inertia.uncertain += 1;
        }
    }
    Ok(inertia)
}

/// Spectral lower bound on the frustration index:
/// `(sum_v d(v)^2 - m * lambda_max(L)) / 4`. May be negative (vacuous);
/// reported as-is.
pub fn spectral_lower_bound(g: &SimpleGraph) -> Result<f64> {
    let degree_square_sum: f64 = g.degrees().iter().map(|&d| (d * d) as f64).sum();
    let lambda_max = laplacian_max_eigenvalue(g)?;
    Ok((degree_square_sum - g.edge_count() as f64 * lambda_max) / 4.0)
}

/// Combined lower bound: the larger of the Max-Cut defect and the spectral
/// bound.
pub fn combined_lower_bound(g: &SimpleGraph) -> Result<f64> {
    combined_lower_bound_with(g, &SearchLimits::default(), None)
}

pub fn combined_lower_bound_with(
    g: &SimpleGraph,
    limits: &SearchLimits,
    deadline: Deadline,
) -> Result<f64> {
    let defect = maxcut_exact_with(g, limits, deadline)?.defect as f64;
    Ok(defect.max(spectral_lower_bound(g)?))
}

/// Spectral lower bound on the odd cycle transversal number of a cubic
/// graph: `3n (6 - lambda_max) / 16`.
pub fn cubic_oct_spectral_bound(g: &SimpleGraph) -> Result<f64> {
    if !g.is_regular(3) {
        return Err(AlgError::invalid("cubic bound requires a 3-regular graph"));
    }
    let lambda_max = laplacian_max_eigenvalue(g)?;
    Ok(3.0 * g.vertex_count() as f64 * (6.0 - lambda_max) / 16.0)
}

/// Closed regular form of the spectral bound:
/// `(n k / 4) (k - lambda_max / 2)` for a k-regular graph. Must agree with
/// `spectral_lower_bound` exactly.
pub fn regular_bound(g: &SimpleGraph) -> Result<f64> {
    let degs = g.degrees();
    let Some(&k) = degs.first() else {
        return Err(AlgError::invalid("regular bound requires a nonempty graph"));
    };
    if !g.is_regular(k) {
        return Err(AlgError::invalid("regular bound requires a regular graph"));
    }
    let lambda_max = laplacian_max_eigenvalue(g)?;
    let n = g.vertex_count() as f64;
    let k = k as f64;
    Ok(n * k / 4.0 * (k - lambda_max / 2.0))
}
