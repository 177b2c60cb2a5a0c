//! Jack functions J_λ^(α) in the power-sum and monomial bases, the Jack–Plancherel
//! measure, and the character and zonal specializations at α = 1 and α = 2.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::rational::{factorial, pow, positive_alpha, rat, Rational};
use crate::symfunc::{power_to_monomial_coefficient, SymFunc};

/// ⟨p_ρ, p_π⟩_α = δ_ρπ α^{ℓ(ρ)} z_ρ, extended bilinearly.
pub fn inner_product(f: &SymFunc, g: &SymFunc, alpha: &Rational) -> Result<Rational> {
    positive_alpha(alpha)?;
    let mut acc = Rational::zero();
    for (rho, a) in f.terms() {
        let b = g.coefficient(rho);
        if !b.is_zero() {
            acc += a * b * pow(alpha, rho.length() as i64) * rho.z_value();
        }
    }
    Ok(acc)
}

/// θ^λ_ρ(α) for all λ, ρ ⊢ n at one α.
#[derive(Debug)]
pub struct JackTable {
    n: usize,
    alpha: Rational,
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// theta[λ][ρ], both in reverse-lex order
    theta: Vec<Vec<Rational>>,
}

impl JackTable {
    /// Gram–Schmidt on m_λ in increasing lexicographic order (which refines
    /// dominance) gives the monic P_λ; J_λ is P_λ times the lower hook product.
    fn build(n: usize, alpha: &Rational) -> JackTable {
        let parts = partitions_of(n);
        let index: HashMap<Partition, usize> =
            parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let size = parts.len();
        let weight: Vec<Rational> = parts
            .iter()
            .map(|r| pow(alpha, r.length() as i64) * r.z_value())
            .collect();
        let dot = |a: &[Rational], b: &[Rational]| -> Rational {
            a.iter()
                .zip(b)
                .zip(&weight)
                .filter(|((x, y), _)| !x.is_zero() && !y.is_zero())
                .map(|((x, y), w)| x * y * w)
                .fold(Rational::zero(), |acc, t| acc + t)
        };
        let dense = |f: &SymFunc| -> Vec<Rational> {
            parts.iter().map(|r| f.coefficient(r)).collect()
        };
        // monic P in the p-basis, filled from (1^n) upwards
        let mut monic: Vec<Vec<Rational>> = vec![Vec::new(); size];
        let mut norms: Vec<Rational> = vec![Rational::zero(); size];
        for l in (0..size).rev() {
            let mut v = dense(&SymFunc::monomial(&parts[l]));
            for k in (l + 1..size).rev() {
                let c = dot(&v, &monic[k]) / &norms[k];
                if c.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(&monic[k]) {
                    *x -= &c * y;
                }
            }
            norms[l] = dot(&v, &v);
            monic[l] = v;
        }
        let theta = parts
            .iter()
            .zip(monic)
            .map(|(lam, row)| {
                let c = lam.lower_hook_product(alpha);
                row.into_iter().map(|x| x * &c).collect()
            })
            .collect();
        JackTable {
            n,
            alpha: alpha.clone(),
            parts,
            index,
            theta,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    /// Partitions of n in reverse-lex order; rows and columns of the table.
    pub fn partitions(&self) -> &[Partition] {
        &self.parts
    }

    fn idx(&self, p: &Partition) -> Result<usize> {
        self.index.get(p).copied().ok_or_else(|| Error::OutOfRange {
            what: "partition",
            detail: format!("{p} is not a partition of {}", self.n),
        })
    }

    pub fn theta(&self, lambda: &Partition, rho: &Partition) -> Result<Rational> {
        if lambda.size() != rho.size() {
            return Err(Error::SizeMismatch {
                left: lambda.clone(),
                right: rho.clone(),
            });
        }
        Ok(self.theta[self.idx(lambda)?][self.idx(rho)?].clone())
    }

    /// θ^λ_{μ + (1^{n-|μ|})}, zero when n < |μ| + ℓ(μ).
    pub fn theta_reduced(&self, lambda: &Partition, mu: &Partition) -> Result<Rational> {
        match mu.unreduce(self.n) {
            Ok(rho) => self.theta(lambda, &rho),
            Err(_) => {
                self.idx(lambda)?;
                Ok(Rational::zero())
            }
        }
    }

    /// J_λ as a symmetric function.
    pub fn jack(&self, lambda: &Partition) -> Result<SymFunc> {
        let row = &self.theta[self.idx(lambda)?];
        Ok(SymFunc::from_terms(
            self.parts.iter().cloned().zip(row.iter().cloned()),
        ))
    }
}

type TableKey = (usize, Rational);

/// The memoized table for (n, α). Concurrent first requests may build twice;
/// the first published table wins and every caller receives it.
pub fn jack_table(n: usize, alpha: &Rational) -> Result<Arc<JackTable>> {
    positive_alpha(alpha)?;
    static CACHE: OnceLock<Mutex<HashMap<TableKey, Arc<JackTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (n, alpha.clone());
    if let Some(t) = cache.lock().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let built = Arc::new(JackTable::build(n, alpha));
    Ok(cache.lock().unwrap().entry(key).or_insert(built).clone())
}

pub fn theta(lambda: &Partition, rho: &Partition, alpha: &Rational) -> Result<Rational> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: lambda.clone(),
            right: rho.clone(),
        });
    }
    jack_table(lambda.size(), alpha)?.theta(lambda, rho)
}

/// J_λ = Σ_μ u_λμ m_μ; the support lies below λ in dominance order.
pub fn jack_in_monomial(lambda: &Partition, alpha: &Rational) -> Result<BTreeMap<Partition, Rational>> {
    let table = jack_table(lambda.size(), alpha)?;
    let mut out = BTreeMap::new();
    for mu in table.partitions() {
        let mut acc = Rational::zero();
        for rho in table.partitions() {
            let t = table.theta(lambda, rho)?;
            if !t.is_zero() {
                acc += t * power_to_monomial_coefficient(rho, mu);
            }
        }
        if !acc.is_zero() {
            out.insert(mu.clone(), acc);
        }
    }
    Ok(out)
}

/// ℙ_n^(α)(λ) = α^n n! / j_λ^(α).
pub fn jack_plancherel(lambda: &Partition, alpha: &Rational) -> Result<Rational> {
    let n = lambda.size();
    Ok(pow(alpha, n as i64) * Rational::from_integer(factorial(n)) / lambda.j_alpha(alpha)?)
}

/// χ^λ_ρ = θ^λ_ρ(1) z_ρ / H_λ.
pub fn character(lambda: &Partition, rho: &Partition) -> Result<Rational> {
    let t = theta(lambda, rho, &rat(1))?;
    Ok(t * rho.z_value() / Rational::from_integer(lambda.hook_product()))
}

/// ω^λ_ρ = θ^λ_ρ(2) z_ρ / (2^{|ρ|-ℓ(ρ)} |ρ|!).
pub fn zonal_spherical(lambda: &Partition, rho: &Partition) -> Result<Rational> {
    let t = theta(lambda, rho, &rat(2))?;
    let denom = pow(&rat(2), (rho.size() - rho.length()) as i64)
        * Rational::from_integer(factorial(rho.size()));
    Ok(t * rho.z_value() / denom)
}

/// ε_X(J_λ) = Σ_ρ θ^λ_ρ X^{ℓ(ρ)} as a coefficient list in X (index = power).
pub fn specialization_polynomial(lambda: &Partition, alpha: &Rational) -> Result<Vec<Rational>> {
    let table = jack_table(lambda.size(), alpha)?;
    let mut coeffs = vec![Rational::zero(); lambda.size() + 1];
    for rho in table.partitions() {
        coeffs[rho.length()] += table.theta(lambda, rho)?;
    }
    Ok(coeffs)
}

/// ∏_{(i,j)∈λ} (X + α(j-1) - (i-1)) as a coefficient list in X.
pub fn content_product_polynomial(lambda: &Partition, alpha: &Rational) -> Vec<Rational> {
    let mut poly = vec![Rational::one()];
    for (i, j) in lambda.boxes() {
        let c = alpha * rat(j as i64 - 1) - rat(i as i64 - 1);
        let mut next = vec![Rational::zero(); poly.len() + 1];
        for (k, a) in poly.iter().enumerate() {
            next[k + 1] += a;
            next[k] += a * &c;
        }
        poly = next;
    }
    poly
}
