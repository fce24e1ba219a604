//! Eigenvalues of the random-walk operator, computed on its symmetrized form
//! `D^{-1/2} A D^{-1/2}`.
//!
//! Graphs up to `dense_limit` vertices get a dense symmetric solve. Larger
//! graphs use block orthogonal iteration with the principal vector
//! `D^{1/2}·1` projected out, run once on `(I + M)/2` for `λ₂` and once on
//! `(I − M)/2` for `λ_n`.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::{self, Phase};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Spectrum {
    /// Second-largest eigenvalue.
    pub lambda2: f64,
    /// Smallest eigenvalue.
    pub lambda_min: f64,
    /// Nontrivial spectral radius `max(|λ₂|, |λ_n|)`.
    pub rho_star: f64,
    /// `1 − λ₂`.
    pub gap: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct SpectrumOptions {
    pub dense_limit: usize,
    pub tolerance: f64,
    pub max_iterations: usize,
    pub block_size: usize,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions {
            dense_limit: 4096,
            tolerance: 1e-9,
            max_iterations: 100_000,
            block_size: 4,
        }
    }
}

pub fn spectrum(g: &Graph) -> Result<Spectrum> {
    spectrum_with(g, &SpectrumOptions::default())
}

pub fn spectrum_with(g: &Graph, opts: &SpectrumOptions) -> Result<Spectrum> {
    if g.n() < 2 {
        return Err(Error::GraphTooSmall(g.n()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (lambda2, lambda_min) = if g.n() <= opts.dense_limit {
        let ev = dense_eigenvalues(g);
        (ev[1], ev[g.n() - 1])
    } else {
        iterative_extremes(g, opts)?
    };
    let lambda2 = lambda2.clamp(-1.0, 1.0);
    let lambda_min = lambda_min.clamp(-1.0, 1.0);
    Ok(Spectrum {
        lambda2,
        lambda_min,
        rho_star: lambda2.abs().max(lambda_min.abs()),
        gap: 1.0 - lambda2,
    })
}

/// Full walk spectrum in descending order (dense solve). Isolated vertices
/// contribute a zero row.
pub fn walk_eigenvalues(g: &Graph) -> Vec<f64> {
    dense_eigenvalues(g)
}

fn inv_sqrt_degrees(g: &Graph) -> Vec<f64> {
    (0..g.n())
        .map(|v| match g.degree(v) {
            0 => 0.0,
            d => 1.0 / (d as f64).sqrt(),
        })
        .collect()
}

fn dense_eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let s = inv_sqrt_degrees(g);
    let mut m = DMatrix::<f64>::zeros(n, n);
    for (u, v) in g.edges() {
        let w = s[u] * s[v];
        m[(u, v)] = w;
        m[(v, u)] = w;
    }
    let mut ev: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

/// `y = M x` for the symmetrized walk operator.
fn apply_walk(g: &Graph, s: &[f64], x: &[f64], y: &mut [f64]) {
    for (u, out) in y.iter_mut().enumerate() {
        let acc: f64 = g.neighbors(u).iter().map(|&w| s[w] * x[w]).sum();
        *out = s[u] * acc;
    }
}

fn iterative_extremes(g: &Graph, opts: &SpectrumOptions) -> Result<(f64, f64)> {
    let top = dominant_deflated(g, opts, 1.0)?;
    let bottom = dominant_deflated(g, opts, -1.0)?;
    Ok((2.0 * top - 1.0, 1.0 - 2.0 * bottom))
}

/// Largest eigenvalue of `(I + sign·M)/2` on the complement of the principal
/// vector.
fn dominant_deflated(g: &Graph, opts: &SpectrumOptions, sign: f64) -> Result<f64> {
    let n = g.n();
    let k = opts.block_size.clamp(1, n - 1);
    let s = inv_sqrt_degrees(g);
    let mut principal = DVector::from_iterator(n, (0..n).map(|v| (g.degree(v) as f64).sqrt()));
    principal.normalize_mut();

    let mut rng = rng::stream(0x5eed, Phase::Sampling);
    let mut block = DMatrix::from_fn(n, k, |_, _| rng::unit_f64(&mut rng) - 0.5);
    let deflate = |b: &mut DMatrix<f64>| {
        for mut col in b.column_iter_mut() {
            let c = principal.dot(&col);
            col.axpy(-c, &principal, 1.0);
        }
    };
    let apply = |x: &DMatrix<f64>| -> DMatrix<f64> {
        let mut out = DMatrix::zeros(n, x.ncols());
        let mut buf = vec![0.0; n];
        for (j, col) in x.column_iter().enumerate() {
            apply_walk(g, &s, col.as_slice(), &mut buf);
            for i in 0..n {
                out[(i, j)] = 0.5 * (col[i] + sign * buf[i]);
            }
        }
        out
    };

    deflate(&mut block);
    block = block.qr().q();
    let mut previous = f64::NAN;
    for _ in 0..opts.max_iterations {
        let mut image = apply(&block);
        // Rayleigh-Ritz on the current block.
        let h = block.transpose() * &image;
        let h = (&h + h.transpose()) * 0.5;
        let eig = SymmetricEigen::new(h);
        let (best, theta) = eig
            .eigenvalues
            .iter()
            .copied()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("block is nonempty");
        let ritz = &block * eig.eigenvectors.column(best);
        let residual = (&image * eig.eigenvectors.column(best) - &ritz * theta).norm();
        if residual * 2.0 <= opts.tolerance && (theta - previous).abs() * 2.0 <= opts.tolerance {
            return Ok(theta);
        }
        previous = theta;
        deflate(&mut image);
        block = image.qr().q();
    }
    Err(Error::NoConvergence(opts.max_iterations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{named_graph, NamedGraph};

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn complete_graph_closed_form() {
        let sp = spectrum(&named_graph(NamedGraph::Complete, 4).unwrap()).unwrap();
        assert!(close(sp.lambda2, -1.0 / 3.0));
        assert!(close(sp.rho_star, 1.0 / 3.0));
    }

    #[test]
    fn four_cycle_is_bipartite() {
        let c4 = named_graph(NamedGraph::Cycle, 4).unwrap();
        let ev = walk_eigenvalues(&c4);
        for (a, b) in ev.iter().zip([1.0, 0.0, 0.0, -1.0]) {
            assert!(close(*a, b), "{ev:?}");
        }
        assert!(close(spectrum(&c4).unwrap().rho_star, 1.0));
    }

    #[test]
    fn single_edge() {
        let sp = spectrum(&named_graph(NamedGraph::Complete, 2).unwrap()).unwrap();
        assert!(close(sp.lambda2, -1.0));
        assert!(close(sp.gap, 2.0));
        assert!(close(sp.rho_star, 1.0));
    }

    #[test]
    fn cycle_matches_cosines() {
        let n = 9;
        let sp = spectrum(&named_graph(NamedGraph::Cycle, n).unwrap()).unwrap();
        let l2 = (2.0 * std::f64::consts::PI / n as f64).cos();
        let ln = (2.0 * std::f64::consts::PI * 4.0 / n as f64).cos();
        assert!(close(sp.lambda2, l2));
        assert!(close(sp.lambda_min, ln));
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(spectrum(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn iterative_agrees_with_dense() {
        let g = named_graph(NamedGraph::Petersen, 0).unwrap();
        let dense = spectrum(&g).unwrap();
        let opts = SpectrumOptions {
            dense_limit: 0,
            ..SpectrumOptions::default()
        };
        let iter = spectrum_with(&g, &opts).unwrap();
        assert!(close(dense.lambda2, iter.lambda2), "{dense:?} {iter:?}");
        assert!(close(dense.lambda_min, iter.lambda_min), "{dense:?} {iter:?}");
    }
}
