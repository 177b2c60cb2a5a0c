//! H_n-biinvariant elements in the basis of double-coset sums ψ_μ(n).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::group_algebra::GroupAlgebraElement;
use crate::partition::Partition;
use crate::permutation::{enumerate_matchings, hyperoctahedral_elements, Permutation};
use crate::rational::{rat, Rational};

/// Σ c_μ ψ_μ(n), keyed by reduced coset type with |μ| + ℓ(μ) ≤ n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HeckeElement {
    n: usize,
    coeffs: BTreeMap<Partition, Rational>,
}

impl HeckeElement {
    pub fn new(n: usize) -> Self {
        HeckeElement {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sets a coefficient; zero removes the key.
    pub fn set(&mut self, mu: Partition, c: Rational) -> Result<()> {
        let need = mu.reduced_weight();
        if need > self.n {
            return Err(Error::TooSmall {
                mu,
                n: self.n,
                need,
            });
        }
        if c.is_zero() {
            self.coeffs.remove(&mu);
        } else {
            self.coeffs.insert(mu, c);
        }
        Ok(())
    }

    pub fn get(&self, mu: &Partition) -> Rational {
        self.coeffs.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rational> {
        &self.coeffs
    }

    /// Value of the function at σ, i.e. the coefficient of its double coset.
    pub fn value_at(&self, sigma: &Permutation) -> Result<Rational> {
        if sigma.degree() != 2 * self.n {
            return Err(Error::DegreeMismatch {
                left: sigma.degree(),
                right: 2 * self.n,
            });
        }
        Ok(self.get(&sigma.reduced_coset_type()?))
    }

    /// Σ c_μ ψ_μ(n) as an element of C[S_{2n}]; with `signed`, ψ^ε_μ(n).
    pub fn to_group_element(&self, signed: bool) -> Result<GroupAlgebraElement> {
        let mut out = GroupAlgebraElement::zero(2 * self.n);
        for (mu, c) in &self.coeffs {
            out = out.add(&psi(mu, self.n, signed)?.scale(c))?;
        }
        Ok(out)
    }
}

impl fmt::Display for HeckeElement {
    /// `coset-type<TAB>value` lines in partition order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (mu, c) in &self.coeffs {
            writeln!(f, "{mu}\t{c}")?;
        }
        Ok(())
    }
}

/// ψ_μ(n): the sum of all σ ∈ S_{2n} of reduced coset type μ, built as the
/// union of cosets m H_n over matchings m of that type. With `signed`, each
/// σ carries sgn(σ).
pub fn psi(mu: &Partition, n: usize, signed: bool) -> Result<GroupAlgebraElement> {
    mu.unreduce(n)?;
    let h = hyperoctahedral_elements(n);
    let mut out = GroupAlgebraElement::zero(2 * n);
    for m in enumerate_matchings(n) {
        if &m.reduced_coset_type() != mu {
            continue;
        }
        let mp = m.to_permutation();
        for z in &h {
            let s = mp.compose_unchecked(z);
            let c = if signed { s.sign() } else { 1 };
            out.add_term(s, rat(c as i64));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::reduced_types;
    use crate::permutation::all_permutations;

    #[test]
    fn psi_is_the_double_coset() {
        for n in 1..=3 {
            let mut total = 0;
            for mu in reduced_types(n) {
                let p = psi(&mu, n, false).unwrap();
                total += p.len();
                for (s, c) in p.terms() {
                    assert_eq!(s.reduced_coset_type().unwrap(), mu);
                    assert_eq!(*c, rat(1));
                }
            }
            assert_eq!(total, all_permutations(2 * n).len());
        }
        let p0 = psi(&Partition::empty(), 2, false).unwrap();
        assert_eq!(p0, GroupAlgebraElement::hyperoctahedral_sum(2, false));
        let p0 = psi(&Partition::empty(), 2, true).unwrap();
        assert_eq!(p0, GroupAlgebraElement::hyperoctahedral_sum(2, true));
    }

    #[test]
    fn set_rejects_large_types() {
        let mut h = HeckeElement::new(3);
        assert!(h.set("2,1".parse().unwrap(), rat(1)).is_err());
        h.set("1".parse().unwrap(), rat(2)).unwrap();
        h.set(Partition::empty(), rat(0)).unwrap();
        assert_eq!(h.to_string(), "1\t2\n");
        let s: Permutation = "1 4 2 3 5 6".parse().unwrap();
        assert_eq!(h.value_at(&s).unwrap(), rat(2));
    }
}
