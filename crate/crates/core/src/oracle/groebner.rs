use std::collections::BTreeSet;

use crate::algebra::{GPolynomial, GaussianRational, Monomial};

/// A reduced Gröbner basis under graded-lex with `x > y`.
///
/// Invariants: every generator is monic, no leading monomial divides another
/// generator's term, generators are sorted by leading monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroebnerBasis {
    generators: Vec<GPolynomial>,
}

/// Size of `C[x, y] / I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientDim {
    Finite(usize),
    Infinite,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[GPolynomial] {
        &self.generators
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.generators.iter().filter_map(GPolynomial::leading_monomial)
    }

    pub fn is_unit(&self) -> bool {
        self.leading_monomials().any(|m| m == Monomial::ONE)
    }

    /// Fully reduced remainder of `f`.
    pub fn normal_form(&self, f: &GPolynomial) -> GPolynomial {
        reduce(f, &self.generators)
    }

    pub fn contains(&self, f: &GPolynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_all(&self, fs: &[GPolynomial]) -> bool {
        fs.iter().all(|f| self.contains(f))
    }

    /// Whether `m` is outside the initial ideal.
    pub fn is_standard(&self, m: Monomial) -> bool {
        !self.leading_monomials().any(|lm| lm.divides(m))
    }

    /// Exponents `(X, Y)` with `x^X, y^Y` leading monomials, if both exist.
    fn pure_power_bounds(&self) -> Option<(u32, u32)> {
        let x_bound = self.leading_monomials().filter(|m| m.y == 0).map(|m| m.x).min()?;
        let y_bound = self.leading_monomials().filter(|m| m.x == 0).map(|m| m.y).min()?;
        Some((x_bound, y_bound))
    }

    /// Standard monomials in ascending order, or `None` for an infinite staircase.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let (xb, yb) = self.pure_power_bounds()?;
        let mut out: Vec<Monomial> =
            (0..xb).flat_map(|i| (0..yb).map(move |j| Monomial::new(i, j))).filter(|&m| self.is_standard(m)).collect();
        out.sort();
        Some(out)
    }

    pub fn quotient_dimension(&self) -> QuotientDim {
        match self.standard_monomials() {
            Some(v) => QuotientDim::Finite(v.len()),
            None => QuotientDim::Infinite,
        }
    }
}

fn reduce(f: &GPolynomial, basis: &[GPolynomial]) -> GPolynomial {
    let mut rest = f.clone();
    let mut remainder = GPolynomial::zero();
    while let Some((m, c)) = rest.pop_leading() {
        let divisor = basis.iter().find_map(|g| {
            let (lm, lc) = g.leading_term()?;
            m.checked_div(lm).map(|shift| (g, shift, lc))
        });
        match divisor {
            Some((g, shift, lc)) => {
                let factor = c.checked_div(lc).expect("leading coefficients are nonzero");
                // The leading term cancels against the popped one.
                let mut tail = g.clone();
                tail.pop_leading();
                rest.sub_scaled_shifted(&factor, shift, &tail);
            }
            None => remainder.add_term(m, &c),
        }
    }
    remainder
}

fn s_polynomial(f: &GPolynomial, g: &GPolynomial) -> GPolynomial {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let lcm = fm.lcm(gm);
    let left = f.shift(lcm.checked_div(fm).expect("lcm")).scale(&gc.clone());
    let right = g.shift(lcm.checked_div(gm).expect("lcm")).scale(&fc.clone());
    left - right
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first, ties broken by index) and the coprime-leading-monomial criterion.
pub fn buchberger(gens: &[GPolynomial]) -> GroebnerBasis {
    let mut basis: Vec<GPolynomial> = Vec::new();
    for g in gens {
        let r = reduce(g, &basis).monic();
        if !r.is_zero() {
            basis.push(r);
        }
    }
    let lm = |p: &GPolynomial| p.leading_monomial().expect("nonzero");
    let mut pairs: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((lm(&basis[i]).lcm(lm(&basis[j])), j, i));
        }
    }
    while let Some((_, j, i)) = pairs.pop_first() {
        if lm(&basis[i]).is_coprime(lm(&basis[j])) {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        let new = basis.len();
        for (k, b) in basis.iter().enumerate() {
            pairs.insert((lm(b).lcm(lm(&r)), new, k));
        }
        basis.push(r);
    }
    interreduce(basis)
}

fn interreduce(mut basis: Vec<GPolynomial>) -> GroebnerBasis {
    basis.sort_by_key(|p| p.leading_monomial());
    let mut minimal: Vec<GPolynomial> = Vec::new();
    for p in basis {
        let m = p.leading_monomial().expect("nonzero");
        if !minimal.iter().any(|q| q.leading_monomial().expect("nonzero").divides(m)) {
            minimal.push(p);
        }
    }
    let reduced = (0..minimal.len())
        .map(|idx| {
            let (lead_m, _) = minimal[idx].leading_term().expect("nonzero");
            let mut tail = minimal[idx].clone();
            tail.pop_leading();
            let others: Vec<GPolynomial> = minimal.iter().enumerate().filter(|(k, _)| *k != idx).map(|(_, q)| q.clone()).collect();
            let mut out = reduce(&tail, &others);
            out.add_term(lead_m, &GaussianRational::one());
            out
        })
        .collect();
    GroebnerBasis { generators: reduced }
}

/// Two generator lists span the same ideal.
pub fn ideals_equal(lhs: &[GPolynomial], rhs: &[GPolynomial]) -> bool {
    buchberger(lhs) == buchberger(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> GPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn d4_example_basis() {
        let gb = buchberger(&[p("x*y"), p("x^4 + y^4")]);
        let texts: Vec<String> = gb.generators().iter().map(ToString::to_string).collect();
        assert_eq!(texts, ["x*y", "x^4 + y^4", "y^5"]);
        assert_eq!(gb.quotient_dimension(), QuotientDim::Finite(8));
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(buchberger(&[p("x^2*y"), p("y^3")]).generators().len(), 2);
        let gb = buchberger(&[p("x - y"), p("x + y")]);
        let texts: Vec<String> = gb.generators().iter().map(ToString::to_string).collect();
        assert_eq!(texts, ["y", "x"]);
        assert_eq!(gb.quotient_dimension(), QuotientDim::Finite(1));
        assert_eq!(buchberger(&[p("x^2")]).quotient_dimension(), QuotientDim::Infinite);
        assert_eq!(buchberger(&[]).quotient_dimension(), QuotientDim::Infinite);
        assert!(buchberger(&[p("x^2 + 1"), p("x")]).is_unit());
    }
}
