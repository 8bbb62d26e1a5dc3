//! The quartic parameter family `(4u^2, 2u^2 ± u, u^2 ± u, u^2)`: building
//! the nine-polynomial Diophantine system in `x0..x3, u`, reproducing the
//! eighth-root-of-unity derivation of its second half symbolically,
//! enumerating integer solutions by brute force, and running the basis
//! pipeline that exposes the pure-`u` polynomial `u^4 - u^3`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::diffsets::DSParams;
use crate::error::{check_budget, Error, Result};
use crate::groebner::{buchberger, ideal_member, normal_form, IdealBasis};
use crate::polyalg::{int, CyclotomicElement, MonomialOrder, MultiPoly};

/// Canonical variable order for the system: `x0 > x1 > x2 > x3 > u`, which
/// puts the eliminable unknowns first so lexicographic elimination exposes
/// the pure-`u` constraint.
pub fn menon_vars() -> Vec<String> {
    ["x0", "x1", "x2", "x3", "u"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

/// Which derivation a system polynomial comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemSource {
    /// Residue-count equations modulo `w = 4`.
    ResidueCounts,
    /// Evaluation of the product congruence at a primitive 8th root of unity.
    RootOfUnity,
}

/// The nine polynomials `f0..f8`, exactly as derived.
#[derive(Debug, Clone)]
pub struct MenonSystem {
    polys: Vec<MultiPoly>,
}

impl MenonSystem {
    pub fn build() -> Self {
        let vars = menon_vars();
        let x = |name: &str| MultiPoly::variable(&vars, name).unwrap();
        let (x0, x1, x2, x3, u) = (x("x0"), x("x1"), x("x2"), x("x3"), x("u"));
        let u2 = &u * &u;
        // the common tail u^2 * (u^2 - u)
        let tail = &u2 * &(&u2 - &u);
        let squares = &(&(&x0 * &x0) + &(&x1 * &x1)) + &(&(&x2 * &x2) + &(&x3 * &x3));

        let f0 = &(&(&(&x0 + &x1) + &(&x2 + &x3)) - &u2.scale(&int(2))) + &u;
        let f1 = &(&squares - &u2) - &tail;
        let f2 = &(&(&(&x0 * &x3) + &(&x1 * &x0)) + &(&(&x2 * &x1) + &(&x3 * &x2))) - &tail;
        let f3 = &(&(&(&x0 * &x2) + &(&x1 * &x3)) + &(&(&x2 * &x0) + &(&x3 * &x1))) - &tail;
        let f4 = &(&(&(&x0 * &x1) + &(&x1 * &x2)) + &(&(&x2 * &x3) + &(&x3 * &x0))) - &tail;
        let f5 = &(&(&(&x0 * &x1) + &(&x1 * &x2)) + &(&(&x2 * &x3) - &(&x3 * &x0))) - &tail;
        let f6 = &(&(&(&x0 * &x2) + &(&x1 * &x3)) - &(&(&x2 * &x0) + &(&x3 * &x1))) - &tail;
        let f7 = &(&(&(&x0 * &x3) - &(&x1 * &x0)) - &(&(&x2 * &x1) + &(&x3 * &x2))) - &tail;
        let f8 = &(&squares - &u2) - &tail;

        MenonSystem {
            polys: vec![f0, f1, f2, f3, f4, f5, f6, f7, f8],
        }
    }

    /// All nine polynomials, `f0` through `f8`.
    pub fn polys(&self) -> &[MultiPoly] {
        &self.polys
    }

    pub fn poly(&self, i: usize) -> &MultiPoly {
        &self.polys[i]
    }

    /// The eight-generator ideal `f0..f7` used by the basis pipeline.
    pub fn ideal_generators(&self) -> &[MultiPoly] {
        &self.polys[..8]
    }

    pub fn source(i: usize) -> SystemSource {
        if i <= 4 {
            SystemSource::ResidueCounts
        } else {
            SystemSource::RootOfUnity
        }
    }
}

/// Build the whole system.
pub fn build_menon_system() -> MenonSystem {
    MenonSystem::build()
}

/// The target of the basis claim: `u^4 - u^3`.
pub fn claim_target() -> MultiPoly {
    MultiPoly::parse("u^4 - u^3", &menon_vars()).unwrap()
}

/// Symbolic product of the reduced generating function with its reciprocal
/// at a primitive 8th root of unity: with `theta = x0 + x1·z + x2·z^2 +
/// x3·z^3` and the reciprocal obtained from the reduction table
/// (`z^-1 = -z^3`, `z^-2 = -z^2`, `z^-3 = -z`), returns the four coordinate
/// polynomials of `theta(z) · theta(z^-1)` on `{1, z, z^2, z^3}`.
pub fn derive_lemma7_coefficients() -> CyclotomicElement {
    let vars = menon_vars();
    let x = |name: &str| MultiPoly::variable(&vars, name).unwrap();
    let theta = CyclotomicElement::new([x("x0"), x("x1"), x("x2"), x("x3")]).unwrap();
    let theta_recip =
        CyclotomicElement::new([x("x0"), -&x("x3"), -&x("x2"), -&x("x1")]).unwrap();
    theta
        .checked_mul(&theta_recip)
        .expect("shared variable list")
}

/// Comparison of the symbolic root-of-unity product against the printed
/// second half of the system.
#[derive(Debug, Clone)]
pub struct Lemma7Report {
    /// Coordinates of `theta(z) · theta(z^-1)` on `{1, z, z^2, z^3}`.
    pub product: [MultiPoly; 4],
    /// Coordinates after subtracting `n + (lambda·v/w)(1 + z + z^2 + z^3)`
    /// with `n = u^2` and `lambda·v/w = u^2(u^2 - u)`.
    pub residual: [MultiPoly; 4],
    /// The printed polynomials these must match: `f8, f5, f6, f7`.
    pub expected: [MultiPoly; 4],
    pub matches: [bool; 4],
    /// The `z^2` coordinate of the product cancels identically.
    pub zeta2_coordinate_vanishes: bool,
}

pub fn lemma7_report() -> Lemma7Report {
    let vars = menon_vars();
    let system = MenonSystem::build();
    let product_elem = derive_lemma7_coefficients();
    let product = product_elem.coeffs().clone();

    let u = MultiPoly::variable(&vars, "u").unwrap();
    let u2 = &u * &u;
    let fill = &u2 * &(&u2 - &u);
    let rhs = [&u2 + &fill, fill.clone(), fill.clone(), fill.clone()];

    let mut residual = [
        MultiPoly::zero(&vars),
        MultiPoly::zero(&vars),
        MultiPoly::zero(&vars),
        MultiPoly::zero(&vars),
    ];
    for i in 0..4 {
        residual[i] = &product[i] - &rhs[i];
    }
    let expected = [
        system.poly(8).clone(),
        system.poly(5).clone(),
        system.poly(6).clone(),
        system.poly(7).clone(),
    ];
    let matches = [
        residual[0] == expected[0],
        residual[1] == expected[1],
        residual[2] == expected[2],
        residual[3] == expected[3],
    ];
    Lemma7Report {
        zeta2_coordinate_vanishes: product[2].is_zero(),
        product,
        residual,
        expected,
        matches,
    }
}

/// An integer point of the system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct SolutionPoint {
    pub x: [i64; 4],
    pub u: i64,
}

impl SolutionPoint {
    pub fn coords(&self) -> [i64; 5] {
        [self.x[0], self.x[1], self.x[2], self.x[3], self.u]
    }
}

/// Integer-coefficient term list compiled from a polynomial for fast
/// repeated evaluation.
struct CompiledPoly {
    terms: Vec<(i128, Vec<(usize, u32)>)>,
}

impl CompiledPoly {
    fn compile(p: &MultiPoly) -> Self {
        let terms = p
            .terms()
            .map(|(exps, c)| {
                assert!(c.is_integer(), "system coefficients are integers");
                let coeff = c.to_integer().to_i128().expect("small coefficient");
                let powers = exps
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| (i, e))
                    .collect();
                (coeff, powers)
            })
            .collect();
        CompiledPoly { terms }
    }

    fn eval(&self, point: &[i128]) -> i128 {
        self.terms
            .iter()
            .map(|(c, powers)| {
                let mut t = *c;
                for &(i, e) in powers {
                    for _ in 0..e {
                        t *= point[i];
                    }
                }
                t
            })
            .sum()
    }
}

/// Brute-force enumeration of the integer solutions of `f0 = ... = f8 = 0`
/// with `0 <= x_i <= u^2` for each `u` in the range (`u = 0` admits only the
/// zero tuple). Results are sorted lexicographically by
/// `(x0, x1, x2, x3, u)`.
///
/// The scan budget is the full lattice size `sum over u of (u^2 + 1)^4`;
/// exceeding `max_work` is a resource error.
pub fn enumerate_solutions(u_min: u64, u_max: u64, max_work: u64) -> Result<Vec<SolutionPoint>> {
    if u_min > u_max {
        return Err(Error::BadInput {
            what: "u range",
            detail: format!("u_min = {u_min} exceeds u_max = {u_max}"),
        });
    }
    let needed: u128 = (u_min..=u_max)
        .map(|u| {
            let side = (u as u128) * (u as u128) + 1;
            side * side * side * side
        })
        .sum();
    check_budget("solution enumeration", needed, max_work)?;

    let system = MenonSystem::build();
    let compiled: Vec<CompiledPoly> = system.polys().iter().map(CompiledPoly::compile).collect();

    let mut found = Vec::new();
    for u in u_min..=u_max {
        let bound = (u * u) as i128;
        let linear_target = 2 * (u as i128) * (u as i128) - u as i128;
        for x0 in 0..=bound {
            for x1 in 0..=bound {
                if x0 + x1 > linear_target {
                    break;
                }
                for x2 in 0..=bound {
                    if x0 + x1 + x2 > linear_target {
                        break;
                    }
                    let x3 = linear_target - x0 - x1 - x2;
                    if !(0..=bound).contains(&x3) {
                        continue;
                    }
                    let point = [x0, x1, x2, x3, u as i128];
                    if compiled.iter().all(|f| f.eval(&point) == 0) {
                        found.push(SolutionPoint {
                            x: [x0 as i64, x1 as i64, x2 as i64, x3 as i64],
                            u: u as i64,
                        });
                    }
                }
            }
        }
    }

    // certify each hit with exact rational evaluation before returning
    for pt in &found {
        for f in system.polys() {
            let value = f.eval_ints(&pt.coords())?;
            assert!(value.is_zero(), "integer scan and exact evaluation disagree");
        }
    }
    found.sort_by_key(|p| (p.x, p.u));
    Ok(found)
}

/// Enumeration restricted to the first five polynomials (the residue-count
/// half of the system); used to confirm the full system only removes
/// solutions.
pub fn enumerate_partial_solutions(
    u_min: u64,
    u_max: u64,
    max_work: u64,
) -> Result<Vec<SolutionPoint>> {
    let needed: u128 = (u_min..=u_max)
        .map(|u| {
            let side = (u as u128) * (u as u128) + 1;
            side * side * side * side
        })
        .sum();
    check_budget("solution enumeration", needed, max_work)?;
    let system = MenonSystem::build();
    let compiled: Vec<CompiledPoly> = system.polys()[..5]
        .iter()
        .map(CompiledPoly::compile)
        .collect();
    let mut found = Vec::new();
    for u in u_min..=u_max {
        let bound = (u * u) as i128;
        for x0 in 0..=bound {
            for x1 in 0..=bound {
                for x2 in 0..=bound {
                    for x3 in 0..=bound {
                        let point = [x0, x1, x2, x3, u as i128];
                        if compiled.iter().all(|f| f.eval(&point) == 0) {
                            found.push(SolutionPoint {
                                x: [x0 as i64, x1 as i64, x2 as i64, x3 as i64],
                                u: u as i64,
                            });
                        }
                    }
                }
            }
        }
    }
    found.sort_by_key(|p| (p.x, p.u));
    Ok(found)
}

/// Sign choice in `(4u^2, 2u^2 ± u, u^2 ± u, u^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// The parameter tuple for a given `u` and sign; always satisfies
/// `k(k-1) = lambda(v-1)`.
pub fn menon_params(u: u64, sign: Sign) -> DSParams {
    let u2 = u * u;
    let (k, lambda) = match sign {
        Sign::Plus => (2 * u2 + u, u2 + u),
        Sign::Minus => (2 * u2 - u, u2 - u),
    };
    let params = DSParams {
        v: 4 * u2,
        k,
        lambda,
        n: u2,
    };
    debug_assert!(params.holds_identities());
    params
}

/// Everything the basis-claim audit produces.
#[derive(Debug, Clone)]
pub struct GroebnerClaimReport {
    /// `u^4 - u^3` lies in the ideal of `f0..f7`, under lex.
    pub membership_lex: bool,
    /// Same membership under grevlex (the result is order-independent).
    pub membership_grevlex: bool,
    /// The explicit certificate `2(u^4 - u^3) = f2 - f7 - f4 - f5` expands
    /// to an exact identity.
    pub certificate_holds: bool,
    /// Reduced basis under the canonical lex order.
    pub reduced_basis: Vec<MultiPoly>,
    /// The pure-`u` basis elements with their integer roots.
    pub univariate_in_u: Vec<(MultiPoly, Vec<i64>)>,
    /// Each univariate element divides the target exactly.
    pub univariate_elements_divide_target: bool,
    /// Integer roots of the target itself.
    pub target_roots: Vec<i64>,
    pub target: MultiPoly,
}

/// Integer roots of a polynomial that involves only the variable at index
/// `var_idx`. Uses the rational-root bound: after clearing denominators and
/// stripping the power of the variable, any integer root divides the
/// constant term.
pub fn integer_roots(p: &MultiPoly, var_idx: usize) -> Result<Vec<i64>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("integer root finding"));
    }
    for (exps, _) in p.terms() {
        for (i, &e) in exps.iter().enumerate() {
            if i != var_idx && e > 0 {
                return Err(Error::BadInput {
                    what: "univariate polynomial",
                    detail: format!("variable {} occurs with positive degree", p.vars()[i]),
                });
            }
        }
    }
    let eval_at = |value: i64| -> BigRational {
        let mut point = vec![0i64; p.num_vars()];
        point[var_idx] = value;
        p.eval_ints(&point).expect("point matches variable count")
    };

    let mut roots = Vec::new();
    let min_exp = p.terms().map(|(e, _)| e[var_idx]).min().unwrap();
    if min_exp > 0 {
        roots.push(0);
    }
    // constant term of p / x^min_exp, with denominators cleared
    let trailing: BigRational = p
        .terms()
        .filter(|(e, _)| e[var_idx] == min_exp)
        .map(|(_, c)| c.clone())
        .sum();
    let mut denom_lcm = BigInt::from(1);
    for (_, c) in p.terms() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let constant = (&trailing * BigRational::from_integer(denom_lcm))
        .to_integer()
        .abs();
    let constant = constant.to_u64().ok_or(Error::BadInput {
        what: "univariate polynomial",
        detail: "trailing coefficient too large for root search".into(),
    })?;
    for d in crate::diffsets::divisors(constant) {
        let d = d as i64;
        for candidate in [d, -d] {
            if eval_at(candidate).is_zero() {
                roots.push(candidate);
            }
        }
    }
    roots.sort_unstable();
    roots.dedup();
    Ok(roots)
}

/// Run the full basis-claim audit on the eight-generator ideal.
pub fn verify_groebner_claim() -> Result<GroebnerClaimReport> {
    let system = MenonSystem::build();
    let gens = system.ideal_generators();
    let target = claim_target();
    let lex = MonomialOrder::lex(5);
    let grevlex = MonomialOrder::grevlex(5);

    let lex_basis = buchberger(gens, &lex)?;
    let membership_lex = normal_form(&target, &lex_basis).is_zero();
    let membership_grevlex = ideal_member(&target, gens, &grevlex)?;

    // certificate: 2(u^4 - u^3) = f2 - f7 - f4 - f5
    let combo = &(&(system.poly(2) - system.poly(7)) - system.poly(4)) - system.poly(5);
    let certificate_holds = combo == target.scale(&int(2));

    let mut univariate_in_u = Vec::new();
    let mut all_divide = true;
    for g in lex_basis.generators() {
        let pure_u = g
            .terms()
            .all(|(exps, _)| exps[..4].iter().all(|&e| e == 0));
        if pure_u {
            let roots = integer_roots(g, 4)?;
            let single = IdealBasis::new(vec![g.clone()], lex.clone())?;
            if !normal_form(&target, &single).is_zero() {
                all_divide = false;
            }
            univariate_in_u.push((g.clone(), roots));
        }
    }

    Ok(GroebnerClaimReport {
        membership_lex,
        membership_grevlex,
        certificate_holds,
        reduced_basis: lex_basis.generators().to_vec(),
        univariate_in_u,
        univariate_elements_divide_target: all_divide,
        target_roots: integer_roots(&target, 4)?,
        target,
    })
}
