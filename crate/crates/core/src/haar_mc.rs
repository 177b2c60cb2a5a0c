//! Monte Carlo sampling of Haar-distributed orthogonal matrices. This is the
//! only module that uses floating point.
//!
//! Streams come from ChaCha8 seeded with `seed`; block `b` of an estimate uses
//! ChaCha stream `b`, so a (seed, samples) pair fixes the result on every platform.

use nalgebra::DMatrix;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Samples per independent stream in [`mc_moment`].
pub const BLOCK_SIZE: usize = 4096;

/// Uniform on (-1, 1) with 53 random bits.
fn uniform_pm1(rng: &mut ChaCha8Rng) -> f64 {
    let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    2.0 * u - 1.0
}

/// Marsaglia's polar method; returns a pair of independent standard normals.
fn normal_pair(rng: &mut ChaCha8Rng) -> (f64, f64) {
    loop {
        let x = uniform_pm1(rng);
        let y = uniform_pm1(rng);
        let s = x * x + y * y;
        if s > 0.0 && s < 1.0 {
            let f = (-2.0 * s.ln() / s).sqrt();
            return (x * f, y * f);
        }
    }
}

fn gaussian_matrix(big_n: usize, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    let total = big_n * big_n;
    let mut v = Vec::with_capacity(total + 1);
    while v.len() < total {
        let (a, b) = normal_pair(rng);
        v.push(a);
        v.push(b);
    }
    v.truncate(total);
    DMatrix::from_vec(big_n, big_n, v)
}

/// QR of a Gaussian matrix with the columns of Q flipped so that diag(R) > 0.
fn haar_from(rng: &mut ChaCha8Rng, big_n: usize) -> DMatrix<f64> {
    let qr = gaussian_matrix(big_n, rng).qr();
    let r = qr.r();
    let mut q = qr.q();
    for k in 0..big_n {
        if r[(k, k)] < 0.0 {
            q.column_mut(k).neg_mut();
        }
    }
    q
}

#[derive(Clone, Debug)]
pub struct OrthogonalSample {
    entries: DMatrix<f64>,
}

impl OrthogonalSample {
    pub fn dimension(&self) -> usize {
        self.entries.nrows()
    }

    /// g_ij, 1-based.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[(i - 1, j - 1)]
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.entries
    }

    /// max |GᵀG - I| over entries.
    pub fn orthogonality_residual(&self) -> f64 {
        let g = &self.entries;
        let gram = g.transpose() * g;
        let id = DMatrix::<f64>::identity(g.nrows(), g.ncols());
        (gram - id).amax()
    }

    pub fn determinant(&self) -> f64 {
        self.entries.determinant()
    }
}

fn check_dimension(big_n: usize) -> Result<()> {
    if big_n == 0 {
        Err(Error::OutOfRange {
            what: "matrix dimension",
            detail: "N must be at least 1".into(),
        })
    } else {
        Ok(())
    }
}

/// One Haar-distributed element of O(N), determined by `seed`.
pub fn sample_orthogonal(big_n: usize, seed: u64) -> Result<OrthogonalSample> {
    check_dimension(big_n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(OrthogonalSample {
        entries: haar_from(&mut rng, big_n),
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: usize,
}

impl McEstimate {
    /// (mean - exact) / stderr; zero when both the error and the spread vanish.
    pub fn z_score(&self, exact: f64) -> f64 {
        let diff = self.mean - exact;
        if self.stderr == 0.0 {
            if diff.abs() < 1e-12 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            diff / self.stderr
        }
    }

    pub fn within(&self, exact: f64, sigmas: f64) -> bool {
        self.z_score(exact).abs() <= sigmas
    }
}

/// Sample mean and standard error of ∏ g_{i(k) j(k)}.
pub fn mc_moment(
    i: &[usize],
    j: &[usize],
    big_n: usize,
    samples: usize,
    seed: u64,
) -> Result<McEstimate> {
    check_dimension(big_n)?;
    if i.len() != j.len() || i.len() % 2 != 0 {
        return Err(Error::OutOfRange {
            what: "index sequences",
            detail: format!("need equal even lengths, got {} and {}", i.len(), j.len()),
        });
    }
    if let Some(&bad) = i.iter().chain(j).find(|&&x| x == 0 || x > big_n) {
        return Err(Error::OutOfRange {
            what: "matrix index",
            detail: format!("{bad} not in 1..={big_n}"),
        });
    }
    if samples < 2 {
        return Err(Error::OutOfRange {
            what: "sample count",
            detail: format!("{samples} < 2"),
        });
    }
    let blocks = samples.div_ceil(BLOCK_SIZE);
    let sums: Vec<(f64, f64)> = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b as u64);
            let count = BLOCK_SIZE.min(samples - b * BLOCK_SIZE);
            let (mut s, mut s2) = (0.0, 0.0);
            for _ in 0..count {
                let g = haar_from(&mut rng, big_n);
                let x: f64 = i.iter().zip(j).map(|(&a, &c)| g[(a - 1, c - 1)]).product();
                s += x;
                s2 += x * x;
            }
            (s, s2)
        })
        .collect();
    // fixed summation order keeps the estimate independent of thread count
    let (s, s2) = sums
        .iter()
        .fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let n = samples as f64;
    let mean = s / n;
    let var = ((s2 - n * mean * mean) / (n - 1.0)).max(0.0);
    Ok(McEstimate {
        mean,
        stderr: (var / n).sqrt(),
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_orthogonal() {
        for big_n in 1..=6 {
            for seed in 0..20 {
                let g = sample_orthogonal(big_n, seed).unwrap();
                assert!(g.orthogonality_residual() < 1e-10);
                assert!((g.determinant().abs() - 1.0).abs() < 1e-8);
            }
        }
        assert!(sample_orthogonal(0, 1).is_err());
    }

    #[test]
    fn deterministic_streams() {
        let a = sample_orthogonal(4, 42).unwrap();
        let b = sample_orthogonal(4, 42).unwrap();
        assert_eq!(a.matrix(), b.matrix());
        let x = mc_moment(&[1, 1], &[1, 1], 3, 5000, 7).unwrap();
        let y = mc_moment(&[1, 1], &[1, 1], 3, 5000, 7).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn one_dimensional_signs() {
        let plus = (0..10_000u64)
            .filter(|&s| sample_orthogonal(1, s).unwrap().get(1, 1) > 0.0)
            .count();
        let freq = plus as f64 / 10_000.0;
        assert!((freq - 0.5).abs() < 0.02, "frequency {freq}");
    }

    #[test]
    fn second_moment() {
        let e = mc_moment(&[1, 1], &[1, 1], 4, 20_000, 3).unwrap();
        assert!(e.within(0.25, 4.0), "{e:?}");
        let e = mc_moment(&[1, 1], &[1, 2], 4, 20_000, 3).unwrap();
        assert!(e.within(0.0, 4.0), "{e:?}");
        assert!(mc_moment(&[1], &[1], 4, 10, 0).is_err());
        assert!(mc_moment(&[1, 5], &[1, 1], 4, 10, 0).is_err());
    }
}
