//! Exact multivariate polynomial arithmetic.
//!
//! [`MultiPoly`] is a sparse polynomial over the rationals with
//! arbitrary-precision coefficients. The term map is keyed by exponent
//! vectors, stores no zero coefficients, and is therefore a canonical form:
//! two polynomials over the same variable list are equal exactly when their
//! term maps are equal. Everything downstream (basis completion, the
//! difference-set congruences, the quartic cyclic systems) relies on this
//! arithmetic being exact; floating point would invalidate the identities
//! being checked.
//!
//! [`MonomialOrder`] supplies the two term orders used by the basis engine,
//! lexicographic and graded reverse lexicographic, with a configurable
//! variable precedence.

mod cyclotomic;
mod parse;

pub use cyclotomic::{cyclotomic_mul, CyclotomicElement};

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exponent vector of a monomial; entry `i` is the power of variable `i`.
pub type Exponents = Vec<u32>;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Invariants: no stored coefficient is zero, and every exponent vector has
/// length equal to the variable count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, BigRational>,
}

/// Convenience for building exact rational constants.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact integer as a rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl MultiPoly {
    /// The zero polynomial over the given variables.
    pub fn zero(vars: &[String]) -> Self {
        MultiPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    /// A constant polynomial.
    pub fn constant(vars: &[String], c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &[String]) -> Self {
        Self::constant(vars, BigRational::one())
    }

    /// The polynomial consisting of the single named variable.
    pub fn variable(vars: &[String], name: &str) -> Result<Self> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(exps, BigRational::one());
        Ok(p)
    }

    /// Build from raw terms; duplicate monomials are summed and zero
    /// coefficients dropped.
    pub fn from_terms<I>(vars: &[String], terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponents, BigRational)>,
    {
        let mut p = Self::zero(vars);
        for (exps, coeff) in terms {
            if exps.len() != vars.len() {
                return Err(Error::BadInput {
                    what: "exponent vector",
                    detail: format!("length {} does not match {} variables", exps.len(), vars.len()),
                });
            }
            p.add_term(exps, coeff);
        }
        Ok(p)
    }

    /// Parse a polynomial literal over the given variables.
    pub fn parse(input: &str, vars: &[String]) -> Result<Self> {
        parse::parse_poly(input, vars)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The value of a constant polynomial; `None` if any variable occurs.
    pub fn constant_value(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (exps, c) = self.terms.iter().next().unwrap();
            if exps.iter().all(|&e| e == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    fn add_term(&mut self, exps: Exponents, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_vars(&self, rhs: &Self) -> Result<()> {
        if self.vars == rhs.vars {
            Ok(())
        } else {
            Err(Error::MismatchedVariables {
                left: self.vars.join(", "),
                right: rhs.vars.join(", "),
            })
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_vars(rhs)?;
        let mut out = self.clone();
        for (exps, c) in &rhs.terms {
            out.add_term(exps.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_vars(rhs)?;
        let mut out = self.clone();
        for (exps, c) in &rhs.terms {
            out.add_term(exps.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_vars(rhs)?;
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps = monomial_mul(ea, eb);
                out.add_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| (e.clone(), v * c))
            .collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Multiply by the single term `c * X^exps`.
    pub fn mul_term(&self, exps: &[u32], c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| (monomial_mul(e, exps), v * c))
            .collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Substitute rationals for a subset of the variables. The result ranges
    /// over the remaining variables, in their original order; substituting
    /// every variable yields a constant polynomial over no variables.
    pub fn substitute(&self, bindings: &BTreeMap<String, BigRational>) -> Result<Self> {
        for name in bindings.keys() {
            if !self.vars.contains(name) {
                return Err(Error::UnknownVariable(name.clone()));
            }
        }
        let bound: Vec<Option<&BigRational>> =
            self.vars.iter().map(|v| bindings.get(v)).collect();
        let remaining: Vec<String> = self
            .vars
            .iter()
            .filter(|v| !bindings.contains_key(*v))
            .cloned()
            .collect();
        let mut out = Self::zero(&remaining);
        for (exps, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::with_capacity(remaining.len());
            for (i, &e) in exps.iter().enumerate() {
                match bound[i] {
                    Some(val) => coeff *= pow_rational(val, e),
                    None => rest.push(e),
                }
            }
            out.add_term(rest, coeff);
        }
        Ok(out)
    }

    /// Full evaluation; every variable of the polynomial must be bound.
    pub fn eval(&self, bindings: &BTreeMap<String, BigRational>) -> Result<BigRational> {
        for v in &self.vars {
            if !bindings.contains_key(v) {
                return Err(Error::UnknownVariable(format!("{v} (unbound in full evaluation)")));
            }
        }
        let c = self.substitute(bindings)?;
        Ok(c.constant_value().expect("fully substituted polynomial is constant"))
    }

    /// Positional full evaluation at integer coordinates.
    pub fn eval_ints(&self, point: &[i64]) -> Result<BigRational> {
        if point.len() != self.vars.len() {
            return Err(Error::BadInput {
                what: "evaluation point",
                detail: format!("{} coordinates for {} variables", point.len(), self.vars.len()),
            });
        }
        let bindings: BTreeMap<String, BigRational> = self
            .vars
            .iter()
            .zip(point)
            .map(|(v, &x)| (v.clone(), int(x)))
            .collect();
        self.eval(&bindings)
    }

    /// Leading term under the given order.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Exponents, &BigRational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Divide through by the leading coefficient.
    pub fn make_monic(&self, order: &MonomialOrder) -> Self {
        match self.leading(order) {
            Some((_, lc)) if !lc.is_one() => {
                let inv = lc.recip();
                self.scale(&inv)
            }
            _ => self.clone(),
        }
    }
}

fn pow_rational(base: &BigRational, exp: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-BigRational::one())
    }
}

// Operator impls panic on mismatched variable lists; use the checked_*
// methods when the lists are not known to agree.
impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: Self) -> MultiPoly {
        self.checked_add(rhs).expect("variable lists must match")
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: Self) -> MultiPoly {
        self.checked_sub(rhs).expect("variable lists must match")
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: Self) -> MultiPoly {
        self.checked_mul(rhs).expect("variable lists must match")
    }
}

/// Componentwise product of monomials.
pub fn monomial_mul(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Componentwise least common multiple (max) of monomials.
pub fn monomial_lcm(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Exact monomial quotient, or `None` when `b` does not divide `a`.
pub fn monomial_div(a: &[u32], b: &[u32]) -> Option<Exponents> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_sub(*y))
        .collect()
}

/// The two supported order kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// A monomial order: an order kind plus a variable precedence, given as a
/// permutation of variable indices with the most significant variable first.
///
/// Both kinds are total, multiplicative (`a < b` implies `ac < bc`), and
/// have the constant monomial as minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    /// Lexicographic with the variable-list order as precedence.
    pub fn lex(num_vars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            precedence: (0..num_vars).collect(),
        }
    }

    /// Graded reverse lexicographic with the variable-list order as precedence.
    pub fn grevlex(num_vars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::GrevLex,
            precedence: (0..num_vars).collect(),
        }
    }

    /// Custom precedence; `precedence[0]` is the most significant variable.
    pub fn with_precedence(kind: OrderKind, precedence: Vec<usize>) -> Result<Self> {
        let n = precedence.len();
        let mut seen = vec![false; n];
        for &i in &precedence {
            if i >= n || seen[i] {
                return Err(Error::BadPrecedence { expected: n });
            }
            seen[i] = true;
        }
        Ok(MonomialOrder { kind, precedence })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn num_vars(&self) -> usize {
        self.precedence.len()
    }

    /// Compare two monomials; `Greater` means `a` is the larger monomial.
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), self.precedence.len());
        debug_assert_eq!(b.len(), self.precedence.len());
        match self.kind {
            OrderKind::Lex => {
                for &i in &self.precedence {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GrevLex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                // Equal degree: the monomial with the smaller exponent on the
                // least significant differing variable is the larger one.
                for &i in self.precedence.iter().rev() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        ord => return ord.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn p(src: &str, vs: &[&str]) -> MultiPoly {
        MultiPoly::parse(src, &vars(vs)).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let vs = vars(&["x0", "u"]);
        let a = MultiPoly::parse("x0 + u", &vs).unwrap();
        let b = MultiPoly::parse("x0 - u", &vs).unwrap();
        assert_eq!(&a * &b, MultiPoly::parse("x0^2 - u^2", &vs).unwrap());
    }

    #[test]
    fn mismatched_vars_rejected() {
        let a = p("x", &["x"]);
        let b = p("y", &["y"]);
        assert!(matches!(
            a.checked_add(&b),
            Err(Error::MismatchedVariables { .. })
        ));
    }

    #[test]
    fn substitute_partial_and_full() {
        let vs = vars(&["x", "y"]);
        let q = MultiPoly::parse("x^2*y + 2*x - y", &vs).unwrap();
        let mut half = BTreeMap::new();
        half.insert("x".to_string(), int(3));
        let r = q.substitute(&half).unwrap();
        assert_eq!(r.vars(), &vars(&["y"]));
        assert_eq!(r, MultiPoly::parse("8*y + 6", &vars(&["y"])).unwrap());

        let mut full = half.clone();
        full.insert("y".to_string(), rat(1, 2));
        assert_eq!(q.eval(&full).unwrap(), int(10)); // 9/2 + 6 - 1/2
    }

    #[test]
    fn substitute_unknown_variable_is_error() {
        let q = p("x", &["x"]);
        let mut b = BTreeMap::new();
        b.insert("z".to_string(), int(1));
        assert!(matches!(q.substitute(&b), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn quartic_at_two() {
        let vs = vars(&["u"]);
        let g0 = MultiPoly::parse("u^4 - u^3", &vs).unwrap();
        assert_eq!(g0.eval_ints(&[2]).unwrap(), int(8));
    }

    #[test]
    fn lex_order_basics() {
        let ord = MonomialOrder::lex(2);
        // x > y: (1,0) > (0,5)
        assert_eq!(ord.cmp(&[1, 0], &[0, 5]), Ordering::Greater);
        assert_eq!(ord.cmp(&[0, 0], &[0, 1]), Ordering::Less);
    }

    #[test]
    fn grevlex_order_basics() {
        let ord = MonomialOrder::grevlex(3);
        // degree dominates
        assert_eq!(ord.cmp(&[0, 0, 3], &[1, 1, 0]), Ordering::Greater);
        // equal degree: x^2*y*z < x*y^3 under grevlex x > y > z
        assert_eq!(ord.cmp(&[2, 1, 1], &[1, 3, 0]), Ordering::Less);
    }

    #[test]
    fn custom_precedence() {
        // precedence y > x under lex
        let ord = MonomialOrder::with_precedence(OrderKind::Lex, vec![1, 0]).unwrap();
        assert_eq!(ord.cmp(&[5, 0], &[0, 1]), Ordering::Less);
        assert!(MonomialOrder::with_precedence(OrderKind::Lex, vec![1, 1]).is_err());
    }

    // Strategy: polynomials in three variables, at most 5 terms, total
    // degree at most 4, small rational coefficients.
    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        let term = (
            (0u32..=4, 0u32..=4, 0u32..=4).prop_filter("degree cap", |(a, b, c)| a + b + c <= 4),
            -20i64..=20,
            1i64..=5,
        );
        proptest::collection::vec(term, 0..=5).prop_map(|ts| {
            let vs = vars(&["a", "b", "c"]);
            MultiPoly::from_terms(
                &vs,
                ts.into_iter()
                    .map(|((ea, eb, ec), num, den)| (vec![ea, eb, ec], rat(num, den))),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn add_commutes(x in arb_poly(), y in arb_poly()) {
            prop_assert_eq!(&x + &y, &y + &x);
        }

        #[test]
        fn mul_commutes(x in arb_poly(), y in arb_poly()) {
            prop_assert_eq!(&x * &y, &y * &x);
        }

        #[test]
        fn add_associates(x in arb_poly(), y in arb_poly(), z in arb_poly()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        }

        #[test]
        fn mul_associates(x in arb_poly(), y in arb_poly(), z in arb_poly()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }

        #[test]
        fn mul_distributes(x in arb_poly(), y in arb_poly(), z in arb_poly()) {
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        }

        #[test]
        fn additive_inverse(x in arb_poly()) {
            prop_assert!((&x + &(-&x)).is_zero());
        }

        #[test]
        fn degree_is_additive(x in arb_poly(), y in arb_poly()) {
            // Coefficients form a field, so no degree collapse.
            prop_assume!(!x.is_zero() && !y.is_zero());
            let product = &x * &y;
            prop_assert_eq!(
                product.total_degree().unwrap(),
                x.total_degree().unwrap() + y.total_degree().unwrap()
            );
        }

        #[test]
        fn display_parse_round_trip(x in arb_poly()) {
            let text = x.to_string();
            let back = MultiPoly::parse(&text, x.vars()).unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn orders_are_multiplicative(
            a in proptest::collection::vec(0u32..=3, 3),
            b in proptest::collection::vec(0u32..=3, 3),
            c in proptest::collection::vec(0u32..=3, 3),
        ) {
            for ord in [MonomialOrder::lex(3), MonomialOrder::grevlex(3)] {
                let base = ord.cmp(&a, &b);
                let shifted = ord.cmp(&monomial_mul(&a, &c), &monomial_mul(&b, &c));
                prop_assert_eq!(base, shifted);
                // constant monomial is minimal
                prop_assert_ne!(ord.cmp(&[0, 0, 0], &a), Ordering::Greater);
            }
        }
    }
}
