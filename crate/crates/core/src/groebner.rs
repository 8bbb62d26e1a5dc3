//! Basis completion over the rationals: S-polynomials, multivariate division
//! (normal form), Buchberger's algorithm with the coprime-leading-term
//! criterion and normal pair selection, and ideal-membership testing.
//!
//! The completion returns the reduced basis: every generator monic and no
//! term of any generator divisible by the leading term of another. For a
//! fixed order and input the reduced basis is unique, which makes it usable
//! as a regression anchor.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polyalg::{monomial_div, monomial_lcm, monomial_mul, Exponents, MonomialOrder, MultiPoly};

/// Cap on pair reductions. Termination is guaranteed by Dickson's lemma;
/// the cap only guards against implementation bugs.
pub const PAIR_REDUCTION_CAP: u64 = 1_000_000;

/// An ordered generating set with the order it was built under.
#[derive(Debug, Clone)]
pub struct IdealBasis {
    generators: Vec<MultiPoly>,
    order: MonomialOrder,
    reduced: bool,
}

impl IdealBasis {
    /// Wrap raw generators (not assumed to be a Gröbner basis). Zero
    /// generators are rejected, as is an empty list.
    pub fn new(generators: Vec<MultiPoly>, order: MonomialOrder) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyBasis);
        }
        if generators.iter().any(|g| g.is_zero()) {
            return Err(Error::ZeroPolynomial("ideal basis"));
        }
        Ok(IdealBasis {
            generators,
            order,
            reduced: false,
        })
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Whether this is a reduced Gröbner basis (set by [`buchberger`]).
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }
}

/// S-polynomial `S(a, b) = (lcm/lt(a))·a - (lcm/lt(b))·b` where `lcm` is the
/// least common multiple of the leading monomials.
pub fn s_polynomial(a: &MultiPoly, b: &MultiPoly, order: &MonomialOrder) -> Result<MultiPoly> {
    let (la, ca) = a.leading(order).ok_or(Error::ZeroPolynomial("s_polynomial"))?;
    let (lb, cb) = b.leading(order).ok_or(Error::ZeroPolynomial("s_polynomial"))?;
    let lcm = monomial_lcm(la, lb);
    let ma = monomial_div(&lcm, la).expect("lcm divisible by lm(a)");
    let mb = monomial_div(&lcm, lb).expect("lcm divisible by lm(b)");
    let left = a.mul_term(&ma, &ca.recip());
    let right = b.mul_term(&mb, &cb.recip());
    left.checked_sub(&right)
}

/// Remainder of `p` under multivariate division by the basis generators.
///
/// The result `r` satisfies `p - r` in the generated ideal and no term of
/// `r` is divisible by any generator's leading monomial. When the basis is a
/// reduced Gröbner basis the remainder is the unique canonical one, and
/// `r = 0` exactly when `p` lies in the ideal.
pub fn normal_form(p: &MultiPoly, basis: &IdealBasis) -> MultiPoly {
    let order = &basis.order;
    let leads: Vec<(Exponents, BigRational)> = basis
        .generators
        .iter()
        .map(|g| {
            let (lm, lc) = g.leading(order).expect("basis generators are nonzero");
            (lm.clone(), lc.clone())
        })
        .collect();

    let vars = p.vars().to_vec();
    let mut work = p.clone();
    let mut remainder = MultiPoly::zero(&vars);
    while !work.is_zero() {
        let (lm, lc) = {
            let (lm, lc) = work.leading(order).unwrap();
            (lm.clone(), lc.clone())
        };
        let mut divided = false;
        for (g, (glm, glc)) in basis.generators.iter().zip(&leads) {
            if let Some(q) = monomial_div(&lm, glm) {
                let factor = &lc / glc;
                work = work
                    .checked_sub(&g.mul_term(&q, &factor))
                    .expect("shared variable list");
                divided = true;
                break;
            }
        }
        if !divided {
            // move the leading term to the remainder
            let t = MultiPoly::from_terms(&vars, [(lm.clone(), lc.clone())])
                .expect("term over own variables");
            remainder = remainder.checked_add(&t).expect("shared variable list");
            work = work.checked_sub(&t).expect("shared variable list");
        }
    }
    remainder
}

/// Buchberger completion returning the reduced Gröbner basis.
///
/// Pair selection is "normal": the pending pair with the smallest leading-
/// monomial lcm under the order is processed first, with the pair indices as
/// a deterministic tie break. Pairs with coprime leading monomials are
/// skipped (their S-polynomial always reduces to zero).
pub fn buchberger(generators: &[MultiPoly], order: &MonomialOrder) -> Result<IdealBasis> {
    let working: Vec<MultiPoly> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.make_monic(order))
        .collect();
    if working.is_empty() {
        return Err(Error::EmptyBasis);
    }

    let mut basis = working;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }

    let mut reductions: u64 = 0;
    while !pairs.is_empty() {
        // normal selection: smallest lcm first, then smallest (i, j)
        let lm = |i: usize| basis[i].leading(order).unwrap().0;
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, &(ai, aj)), (_, &(bi, bj))| {
                let la = monomial_lcm(lm(ai), lm(aj));
                let lb = monomial_lcm(lm(bi), lm(bj));
                order.cmp(&la, &lb).then((ai, aj).cmp(&(bi, bj)))
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let (i, j) = pairs.swap_remove(best);

        let (lmi, lmj) = (lm(i).clone(), lm(j).clone());
        // first Buchberger criterion: coprime leading monomials
        if monomial_lcm(&lmi, &lmj) == monomial_mul(&lmi, &lmj) {
            continue;
        }

        reductions += 1;
        if reductions > PAIR_REDUCTION_CAP {
            return Err(Error::IterationCap {
                cap: PAIR_REDUCTION_CAP,
            });
        }

        let s = s_polynomial(&basis[i], &basis[j], order)?;
        let snapshot = IdealBasis {
            generators: basis.clone(),
            order: order.clone(),
            reduced: false,
        };
        let r = normal_form(&s, &snapshot);
        if !r.is_zero() {
            let r = r.make_monic(order);
            let new_idx = basis.len();
            basis.push(r);
            for k in 0..new_idx {
                pairs.push((k, new_idx));
            }
        }
    }

    // minimize: drop generators whose leading monomial is divisible by
    // another kept generator's leading monomial
    let mut order_by_lm: Vec<usize> = (0..basis.len()).collect();
    order_by_lm.sort_by(|&a, &b| {
        order
            .cmp(basis[a].leading(order).unwrap().0, basis[b].leading(order).unwrap().0)
            .then(a.cmp(&b))
    });
    let mut kept: Vec<MultiPoly> = Vec::new();
    for idx in order_by_lm {
        let lm = basis[idx].leading(order).unwrap().0.clone();
        let redundant = kept
            .iter()
            .any(|k| monomial_div(&lm, k.leading(order).unwrap().0).is_some());
        if !redundant {
            kept.push(basis[idx].clone());
        }
    }

    // reduce tails: replace each generator by its normal form against the
    // others (leading monomials are pairwise indivisible, so they survive)
    let mut reduced = Vec::with_capacity(kept.len());
    for i in 0..kept.len() {
        let others: Vec<MultiPoly> = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let g = if others.is_empty() {
            kept[i].clone()
        } else {
            let b = IdealBasis {
                generators: others,
                order: order.clone(),
                reduced: false,
            };
            normal_form(&kept[i], &b)
        };
        reduced.push(g.make_monic(order));
    }
    reduced.sort_by(|a, b| {
        order.cmp(
            a.leading(order).unwrap().0,
            b.leading(order).unwrap().0,
        )
    });

    Ok(IdealBasis {
        generators: reduced,
        order: order.clone(),
        reduced: true,
    })
}

/// Ideal membership via normal form against the completed basis. The result
/// does not depend on the chosen order.
pub fn ideal_member(p: &MultiPoly, generators: &[MultiPoly], order: &MonomialOrder) -> Result<bool> {
    let basis = buchberger(generators, order)?;
    Ok(normal_form(p, &basis).is_zero())
}

/// True when the basis is monic, auto-reduced, and every S-polynomial of a
/// basis pair reduces to zero. Used by tests and the claim reports.
pub fn is_reduced_groebner_basis(basis: &IdealBasis) -> bool {
    let order = &basis.order;
    for (i, g) in basis.generators.iter().enumerate() {
        let Some((_, lc)) = g.leading(order) else {
            return false;
        };
        if !lc.is_one() {
            return false;
        }
        for (j, other) in basis.generators.iter().enumerate() {
            if i == j {
                continue;
            }
            let olm = other.leading(order).unwrap().0;
            if g.terms().any(|(e, _)| monomial_div(e, olm).is_some()) {
                return false;
            }
        }
    }
    for i in 0..basis.generators.len() {
        for j in (i + 1)..basis.generators.len() {
            let s = s_polynomial(&basis.generators[i], &basis.generators[j], order).unwrap();
            if !normal_form(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::OrderKind;
    use proptest::prelude::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn p(src: &str, vs: &[String]) -> MultiPoly {
        MultiPoly::parse(src, vs).unwrap()
    }

    #[test]
    fn s_polynomial_hand_example() {
        let vs = vars(&["x", "y"]);
        let ord = MonomialOrder::lex(2);
        let a = p("x^2 + y", &vs);
        let b = p("x*y + 1", &vs);
        // y*(x^2 + y) - x*(x*y + 1) = y^2 - x
        assert_eq!(s_polynomial(&a, &b, &ord).unwrap(), p("y^2 - x", &vs));
    }

    #[test]
    fn s_polynomial_of_equal_inputs_is_zero() {
        let vs = vars(&["x", "y"]);
        let ord = MonomialOrder::lex(2);
        let a = p("3*x^2*y - x + 7", &vs);
        assert!(s_polynomial(&a, &a, &ord).unwrap().is_zero());
    }

    #[test]
    fn s_polynomial_rejects_zero() {
        let vs = vars(&["x"]);
        let ord = MonomialOrder::lex(1);
        let z = MultiPoly::zero(&vs);
        assert!(matches!(
            s_polynomial(&z, &p("x", &vs), &ord),
            Err(Error::ZeroPolynomial(_))
        ));
    }

    #[test]
    fn coprime_pair_reduces_to_zero() {
        let vs = vars(&["x", "y"]);
        let ord = MonomialOrder::lex(2);
        let gens = vec![p("x", &vs), p("y", &vs)];
        let s = s_polynomial(&gens[0], &gens[1], &ord).unwrap();
        let basis = IdealBasis::new(gens, ord).unwrap();
        assert!(normal_form(&s, &basis).is_zero());
    }

    #[test]
    fn normal_form_examples() {
        let vs = vars(&["x"]);
        let ord = MonomialOrder::lex(1);
        let basis = IdealBasis::new(vec![p("x - 1", &vs)], ord).unwrap();
        // x^2 -> x -> 1
        assert_eq!(normal_form(&p("x^2", &vs), &basis), p("1", &vs));
        assert!(normal_form(&MultiPoly::zero(&vs), &basis).is_zero());
    }

    #[test]
    fn buchberger_collapses_to_linear_generator() {
        let vs = vars(&["x"]);
        let ord = MonomialOrder::lex(1);
        let basis = buchberger(&[p("x^2 - 1", &vs), p("x - 1", &vs)], &ord).unwrap();
        assert_eq!(basis.generators(), &[p("x - 1", &vs)]);
        assert!(basis.is_reduced());
    }

    #[test]
    fn constant_generator_gives_unit_ideal() {
        let vs = vars(&["x", "y"]);
        for ord in [MonomialOrder::lex(2), MonomialOrder::grevlex(2)] {
            let basis = buchberger(&[p("7", &vs)], &ord).unwrap();
            assert_eq!(basis.generators(), &[p("1", &vs)]);
        }
    }

    #[test]
    fn textbook_lex_basis() {
        // <x^2 + y^2 - 1, x - y> under lex x > y reduces to {x - y, y^2 - 1/2}
        let vs = vars(&["x", "y"]);
        let ord = MonomialOrder::lex(2);
        let basis = buchberger(&[p("x^2 + y^2 - 1", &vs), p("x - y", &vs)], &ord).unwrap();
        assert_eq!(
            basis.generators(),
            &[p("y^2 - 1/2", &vs), p("x - y", &vs)]
        );
        assert!(is_reduced_groebner_basis(&basis));
    }

    #[test]
    fn membership_of_generator() {
        let vs = vars(&["x", "y"]);
        let ord = MonomialOrder::lex(2);
        let gens = [p("x^2 + y", &vs), p("x*y - 1", &vs)];
        assert!(ideal_member(&gens[0], &gens, &ord).unwrap());
    }

    fn arb_gens() -> impl Strategy<Value = Vec<MultiPoly>> {
        let term = ((0u32..=3, 0u32..=3), -6i64..=6);
        let poly = proptest::collection::vec(term, 1..=3).prop_map(|ts| {
            let vs = vars(&["x", "y"]);
            MultiPoly::from_terms(
                &vs,
                ts.into_iter()
                    .map(|((a, b), n)| (vec![a, b], crate::polyalg::int(n))),
            )
            .unwrap()
        });
        proptest::collection::vec(poly.prop_filter("nonzero", |q| !q.is_zero()), 1..=3)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn completion_properties(gens in arb_gens(), grev in proptest::bool::ANY) {
            let ord = if grev { MonomialOrder::grevlex(2) } else { MonomialOrder::lex(2) };
            let basis = buchberger(&gens, &ord).unwrap();
            // every input generator reduces to zero
            for g in &gens {
                prop_assert!(normal_form(g, &basis).is_zero());
            }
            // reduced basis invariants, including S-pair reduction
            prop_assert!(is_reduced_groebner_basis(&basis));
            // determinism
            let again = buchberger(&gens, &ord).unwrap();
            prop_assert_eq!(basis.generators(), again.generators());
        }

        #[test]
        fn normal_form_is_idempotent(gens in arb_gens(), extra in arb_gens()) {
            let ord = MonomialOrder::lex(2);
            let basis = buchberger(&gens, &ord).unwrap();
            let probe = &extra[0];
            let once = normal_form(probe, &basis);
            let twice = normal_form(&once, &basis);
            prop_assert_eq!(once, twice);
        }
    }

    #[test]
    fn custom_precedence_changes_elimination() {
        // same ideal, precedence y > x: the pure-x polynomial surfaces
        let vs = vars(&["x", "y"]);
        let ord = MonomialOrder::with_precedence(OrderKind::Lex, vec![1, 0]).unwrap();
        let basis = buchberger(&[p("x^2 + y^2 - 1", &vs), p("x - y", &vs)], &ord).unwrap();
        assert_eq!(
            basis.generators(),
            &[p("x^2 - 1/2", &vs), p("y - x", &vs)]
        );
    }
}
