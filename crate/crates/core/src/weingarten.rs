//! The orthogonal Weingarten function: exact values, 1/N expansions and
//! polynomial integrals over O(N).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::averages::{average_at, AvgSpec};
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::jack::zonal_spherical;
use crate::partition::{partitions_of, reduced_types, Partition};
use crate::permutation::enumerate_matchings;
use crate::rational::{double_factorial_odd, rat, Rational};
use crate::series::PowerSeries;
use crate::symfunc::SymFunc;

fn check_dimension(n: usize, big_n: usize) -> Result<()> {
    if big_n < n {
        Err(Error::DimensionTooSmall { big_n, n })
    } else {
        Ok(())
    }
}

/// (f^{2λ} / (2n-1)!!) ω^λ_{μ+(1^{n-|μ|})}: the N-independent weight of λ at coset μ.
fn spectral_weight(lambda: &Partition, rho: &Partition, n: usize) -> Result<Rational> {
    let f2 = Rational::from_integer(lambda.add(lambda).dimension_f());
    Ok(f2 * zonal_spherical(lambda, rho)? / Rational::from_integer(double_factorial_odd(n)))
}

fn compute_wg(n: usize, big_n: usize) -> Result<HeckeElement> {
    let nn = rat(big_n as i64);
    let denoms: Vec<(Partition, Rational)> = partitions_of(n)
        .into_iter()
        .map(|lam| {
            let d = lam
                .modified_contents()
                .values()
                .iter()
                .map(|c| &nn + c)
                .product();
            (lam, d)
        })
        .collect();
    let mut out = HeckeElement::new(n);
    for mu in reduced_types(n) {
        let rho = mu.unreduce(n)?;
        let mut acc = Rational::zero();
        for (lam, d) in &denoms {
            acc += spectral_weight(lam, &rho, n)? / d;
        }
        out.set(mu, acc)?;
    }
    Ok(out)
}

/// Wg^{O(N)}_n as a function of the reduced coset type. Requires N ≥ n.
pub fn wg_exact(n: usize, big_n: usize) -> Result<Arc<HeckeElement>> {
    check_dimension(n, big_n)?;
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<HeckeElement>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(w) = cache.lock().unwrap().get(&(n, big_n)) {
        return Ok(w.clone());
    }
    let built = Arc::new(compute_wg(n, big_n)?);
    Ok(cache
        .lock()
        .unwrap()
        .entry((n, big_n))
        .or_insert(built)
        .clone())
}

/// Wg(μ; n) = Σ_j (-1)^{|μ|+j} g_j N^{-n-|μ|-j}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WgSeries {
    pub n: usize,
    pub mu: Partition,
    /// g_0, g_1, …; all nonnegative
    pub coefficients: Vec<Rational>,
}

impl WgSeries {
    /// Exponent of 1/N carried by g_0.
    pub fn leading_power(&self) -> usize {
        self.n + self.mu.size()
    }

    /// (-1)^{|μ|+j} g_j.
    pub fn signed_coefficients(&self) -> Vec<Rational> {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(j, g)| {
                if (self.mu.size() + j) % 2 == 0 {
                    g.clone()
                } else {
                    -g
                }
            })
            .collect()
    }
}

/// g_j = G^{|μ|+j}_μ(n), the α = 2 average of h_{|μ|+j}, for j = 0..=order.
pub fn wg_series(n: usize, mu: &Partition, order: usize) -> Result<WgSeries> {
    mu.unreduce(n)?;
    let coefficients = (0..=order)
        .into_par_iter()
        .map(|j| {
            let spec = AvgSpec::new(SymFunc::complete(mu.size() + j), mu.clone(), rat(2))?;
            average_at(&spec, n)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WgSeries {
        n,
        mu: mu.clone(),
        coefficients,
    })
}

/// Formal expansion of the exact rational function: coefficients of
/// N^{-n}, N^{-n-1}, …, N^{-n-terms+1}, from series division in x = 1/N.
pub fn wg_formal_expansion(n: usize, mu: &Partition, terms: usize) -> Result<PowerSeries> {
    let rho = mu.unreduce(n)?;
    let mut total = PowerSeries::new(Vec::new(), terms);
    for lam in partitions_of(n) {
        let w = spectral_weight(&lam, &rho, n)?;
        if w.is_zero() {
            continue;
        }
        // ∏ (N + c') = N^n ∏ (1 + c' x)
        let den = lam
            .modified_contents()
            .values()
            .iter()
            .fold(PowerSeries::one(terms), |acc, c| {
                &acc * &PowerSeries::new(vec![Rational::one(), c.clone()], terms)
            });
        let term = PowerSeries::one(terms).div(&den)?.scale(&w);
        total = &total + &term;
    }
    Ok(total)
}

/// Signed coefficients of the formal expansion aligned with [`WgSeries`]:
/// entries for N^{-n-|μ|-j}, j = 0..=order. Errors if a lower power survives.
pub fn wg_formal_series(n: usize, mu: &Partition, order: usize) -> Result<Vec<Rational>> {
    let skip = mu.size();
    let s = wg_formal_expansion(n, mu, skip + order + 1)?;
    if let Some(k) = (0..skip).find(|&k| !s.coeff(k).is_zero()) {
        return Err(Error::OutOfRange {
            what: "Weingarten expansion",
            detail: format!("unexpected nonzero coefficient at N^-{}", n + k),
        });
    }
    Ok((0..=order).map(|j| s.coeff(skip + j)).collect())
}

fn check_indices(i: &[usize], j: &[usize], big_n: usize) -> Result<usize> {
    if i.len() != j.len() {
        return Err(Error::OutOfRange {
            what: "index sequences",
            detail: format!("lengths {} and {} differ", i.len(), j.len()),
        });
    }
    if i.len() % 2 != 0 {
        return Err(Error::OutOfRange {
            what: "index sequences",
            detail: format!("odd length {} (odd moments vanish)", i.len()),
        });
    }
    if let Some(&bad) = i.iter().chain(j).find(|&&x| x == 0 || x > big_n) {
        return Err(Error::OutOfRange {
            what: "matrix index",
            detail: format!("{bad} not in 1..={big_n}"),
        });
    }
    let n = i.len() / 2;
    check_dimension(n, big_n)?;
    Ok(n)
}

/// ∫ g_{i1 j1} ⋯ g_{i2n j2n} dg = Σ_{m,n'} Wg(m⁻¹n') Δ_m(i) Δ_{n'}(j).
pub fn integrate_monomial(i: &[usize], j: &[usize], big_n: usize) -> Result<Rational> {
    let n = check_indices(i, j, big_n)?;
    if n == 0 {
        return Ok(Rational::one());
    }
    let wg = wg_exact(n, big_n)?;
    let matchings = enumerate_matchings(n);
    let left: Vec<_> = matchings
        .iter()
        .filter(|m| m.delta(i))
        .map(|m| m.to_permutation().inverse())
        .collect();
    let right: Vec<_> = matchings
        .iter()
        .filter(|m| m.delta(j))
        .map(|m| m.to_permutation())
        .collect();
    let mut acc = Rational::zero();
    for a in &left {
        for b in &right {
            acc += wg.value_at(&a.compose(b)?)?;
        }
    }
    Ok(acc)
}

/// ∫ g_11² g_22² ⋯ g_nn² dg.
pub fn integrate_diagonal(n: usize, big_n: usize) -> Result<Rational> {
    let idx: Vec<usize> = (1..=n).flat_map(|k| [k, k]).collect();
    integrate_monomial(&idx, &idx, big_n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::averages::catalan_product;
    use crate::rational::ratio;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn n2_den(nn: i64) -> Rational {
        rat(nn * (nn - 1) * (nn + 2))
    }

    #[test]
    fn exact_small_cases() {
        for nn in 1..=7 {
            let w = wg_exact(1, nn).unwrap();
            assert_eq!(w.get(&Partition::empty()), ratio(1, nn as i64));
        }
        for nn in 2..=9i64 {
            let w = wg_exact(2, nn as usize).unwrap();
            assert_eq!(w.get(&Partition::empty()), rat(nn + 1) / n2_den(nn));
            assert_eq!(w.get(&part("1")), rat(-1) / n2_den(nn));
        }
        assert!(wg_exact(3, 2).is_err());
    }

    #[test]
    fn series_examples() {
        let s = wg_series(3, &Partition::empty(), 6).unwrap();
        assert_eq!(s.coefficients, [1, 0, 6, 6, 50, 126, 610].map(rat).to_vec());
        let s = wg_series(4, &part("1"), 3).unwrap();
        assert_eq!(s.coefficients, [1, 1, 21, 57].map(rat).to_vec());
        assert_eq!(s.signed_coefficients(), [-1, 1, -21, 57].map(rat).to_vec());
        for n in 3..=5 {
            assert_eq!(wg_series(n, &part("2"), 0).unwrap().coefficients[0], rat(2));
        }
        assert!(wg_series(2, &part("2"), 1).is_err());
    }

    #[test]
    fn formal_expansion_matches_series() {
        for n in 1..=3 {
            for mu in reduced_types(n) {
                let s = wg_series(n, &mu, 5).unwrap();
                assert_eq!(wg_formal_series(n, &mu, 5).unwrap(), s.signed_coefficients());
                assert_eq!(s.coefficients[0], catalan_product(&mu));
            }
        }
    }

    #[test]
    fn integrals() {
        for nn in 1..=6usize {
            assert_eq!(integrate_monomial(&[1, 1], &[1, 1], nn).unwrap(), ratio(1, nn as i64));
            let total: Rational = (1..=nn)
                .map(|j| integrate_monomial(&[1, 1], &[j, j], nn).unwrap())
                .sum();
            assert_eq!(total, rat(1));
        }
        for nn in 2..=6i64 {
            let n = nn as usize;
            assert_eq!(
                integrate_monomial(&[1, 1, 2, 2], &[1, 1, 2, 2], n).unwrap(),
                rat(nn + 1) / n2_den(nn)
            );
            assert_eq!(
                integrate_monomial(&[1, 1, 1, 1], &[1, 1, 2, 2], n).unwrap(),
                ratio(1, nn * (nn + 2))
            );
            // E[g11^4] = 3/(N(N+2))
            assert_eq!(
                integrate_monomial(&[1, 1, 1, 1], &[1, 1, 1, 1], n).unwrap(),
                ratio(3, nn * (nn + 2))
            );
        }
        assert_eq!(integrate_diagonal(1, 4).unwrap(), ratio(1, 4));
        assert_eq!(integrate_diagonal(2, 5).unwrap(), ratio(3, 70));
        assert_eq!(
            integrate_diagonal(3, 10).unwrap(),
            wg_exact(3, 10).unwrap().get(&Partition::empty())
        );
        assert!(integrate_monomial(&[1], &[1], 3).is_err());
        assert!(integrate_monomial(&[1, 4], &[1, 1], 3).is_err());
        assert!(integrate_monomial(&[1, 1, 1, 1], &[1, 1, 1, 1], 1).is_err());
        assert_eq!(integrate_monomial(&[1, 2], &[1, 1], 3).unwrap(), rat(0));
    }
}
