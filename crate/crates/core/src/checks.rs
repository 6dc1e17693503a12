//! Verification suites.
//!
//! Each suite is a list of named properties checked over an exhaustive range
//! of monomials or a seeded random sample. The work is spread over rayon, but
//! the reported counterexample is always the first one in enumeration order,
//! so output does not depend on scheduling.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::alternative::{
    associator_a, associator_closed_form, check_speciality, mul_a, mul_a_monomials, project,
    AElement, AMonomial,
};
use crate::combinatorics::{binomial, factorial, multinomial};
use crate::diffops::{
    commutator, l_of_monomial, l_of_monomial_by_composition, lmul, rho, rmul, OpWord, Operator,
};
use crate::envelope::{
    as_malcev_vector, associator_u, bracket_u, embed, jacobian_u, mul_cde, mul_u, mul_u_closed,
    RecursiveOracle,
};
use crate::malcev::{bracket_m, jacobian_m, Letter};
use crate::random::Sampler;
use crate::{q, PBWMonomial, Rational, UElement};

use Letter::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Oracle,
    Operators,
    Nucleus,
    Malcev,
    Alternative,
    Homomorphism,
    Special,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Oracle,
        Suite::Operators,
        Suite::Nucleus,
        Suite::Malcev,
        Suite::Alternative,
        Suite::Homomorphism,
        Suite::Special,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Operators => "operators",
            Suite::Nucleus => "nucleus",
            Suite::Malcev => "malcev",
            Suite::Alternative => "alternative",
            Suite::Homomorphism => "homomorphism",
            Suite::Special => "special",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown suite `{}`", self.0)
    }
}

impl std::error::Error for UnknownSuite {}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckParams {
    pub max_degree: u32,
    pub samples: usize,
    pub seed: u64,
    /// Passed to every [`RecursiveOracle`] the suites create.
    pub memo_limit: Option<usize>,
}

impl Default for CheckParams {
    fn default() -> Self {
        CheckParams {
            max_degree: 5,
            samples: 1000,
            seed: 0,
            memo_limit: None,
        }
    }
}

/// A failing case: which property, on what inputs, and both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub property: String,
    pub inputs: Vec<String>,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "property: {}", self.property)?;
        writeln!(f, "inputs:   {}", self.inputs.join(", "))?;
        writeln!(f, "expected: {}", self.expected)?;
        write!(f, "actual:   {}", self.actual)
    }
}

/// Number of cases one property went through.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub name: String,
    pub cases: usize,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub suite: Suite,
    pub params: CheckParams,
    /// Properties run before stopping, in order.
    pub properties: Vec<PropertyOutcome>,
    pub counterexample: Option<Counterexample>,
    pub duration: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn cases(&self) -> usize {
        self.properties.iter().map(|p| p.cases).sum()
    }
}

type Found = Option<Counterexample>;

fn differ<T: PartialEq + fmt::Display>(
    property: &str,
    inputs: impl FnOnce() -> Vec<String>,
    expected: &T,
    actual: &T,
) -> Found {
    if expected == actual {
        None
    } else {
        Some(Counterexample {
            property: property.to_string(),
            inputs: inputs(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        })
    }
}

fn failure(property: &str, inputs: Vec<String>, expected: &str, actual: String) -> Found {
    Some(Counterexample {
        property: property.to_string(),
        inputs,
        expected: expected.to_string(),
        actual,
    })
}

fn strs<T: fmt::Display>(items: &[&T]) -> Vec<String> {
    items.iter().map(|x| x.to_string()).collect()
}

/// First counterexample in item order.
fn scan<T: Sync>(items: &[T], f: impl Fn(&T) -> Found + Sync + Send) -> Found {
    items
        .par_iter()
        .map(f)
        .find_first(Option::is_some)
        .flatten()
}

/// Like [`scan`], with a recursive oracle per worker.
fn scan_with_oracle<T: Sync>(
    items: &[T],
    memo_limit: Option<usize>,
    f: impl Fn(&mut RecursiveOracle, &T) -> Found + Sync + Send,
) -> Found {
    items
        .par_iter()
        .map_init(|| RecursiveOracle::new().with_memo_limit(memo_limit), f)
        .find_first(Option::is_some)
        .flatten()
}

struct Property {
    name: &'static str,
    run: fn(&CheckParams) -> (usize, Found),
}

pub fn run(suite: Suite, params: &CheckParams) -> CheckReport {
    let start = Instant::now();
    let mut properties = Vec::new();
    let mut counterexample = None;
    for p in properties_of(suite) {
        let (cases, found) = (p.run)(params);
        properties.push(PropertyOutcome {
            name: p.name.to_string(),
            cases,
        });
        if found.is_some() {
            counterexample = found;
            break;
        }
    }
    CheckReport {
        suite,
        params: params.clone(),
        properties,
        counterexample,
        duration: start.elapsed(),
    }
}

fn properties_of(suite: Suite) -> Vec<Property> {
    macro_rules! props {
        ($($name:literal => $f:ident),* $(,)?) => {
            vec![$(Property { name: $name, run: $f }),*]
        };
    }
    match suite {
        Suite::Oracle => props![
            "known associator values" => known_values,
            "closed form = recursive oracle = operator" => triple_route,
            "degree filtration" => degree_filtration,
            "cde subalgebra formula" => cde_formula,
            "cde subalgebra associative" => cde_associative,
        ],
        Suite::Operators => props![
            "operator images match oracle" => operator_faithfulness,
            "commutator table" => commutator_table_check,
            "straightening identity" => straightening,
            "power expansions" => power_expansions,
            "L of b^j c^k d^l e^m" => l_of_bcde_check,
            "L of monomial = composition chain" => l_of_monomial_chain,
        ],
        Suite::Nucleus => props![
            "generalized alternative nucleus" => nucleus,
            "associator-commutator formula" => associator_commutator,
        ],
        Suite::Malcev => props![
            "Malcev identity in degree one" => malcev_identity,
            "brackets of M embed" => bracket_embeds,
        ],
        Suite::Alternative => props![
            "alternativity" => alternativity,
            "associators with a type-1 slot vanish" => type1_slot,
            "alternation under transpositions" => alternation,
            "type-2 associator closed form" => type2_closed_form,
        ],
        Suite::Homomorphism => props![
            "project is multiplicative" => projection_homomorphism,
            "alternators generate the ideal" => generators_die,
        ],
        Suite::Special => props![
            "speciality" => speciality,
        ],
    }
}

fn mono(e: [u32; 5]) -> PBWMonomial {
    PBWMonomial::new(e)
}

fn u(e: [u32; 5]) -> UElement {
    UElement::basis(mono(e))
}

fn terms(list: &[([u32; 5], i64, i64)]) -> UElement {
    list.iter().map(|&(e, n, d)| (mono(e), q(n, d))).collect()
}

fn letter(l: Letter) -> UElement {
    UElement::basis(l.into())
}

fn monomials_in(max_degree: u32, letters: &[Letter]) -> Vec<PBWMonomial> {
    PBWMonomial::up_to_degree(max_degree)
        .into_iter()
        .filter(|m| m.supported_in(letters))
        .collect()
}

fn pairs<T: Copy>(items: &[T]) -> Vec<(T, T)> {
    items
        .iter()
        .flat_map(|&x| items.iter().map(move |&y| (x, y)))
        .collect()
}

// ---------------------------------------------------------------- oracle

fn known_values(_: &CheckParams) -> (usize, Found) {
    let abd = u([1, 1, 0, 1, 0]);
    let ab = u([1, 1, 0, 0, 0]);
    let bd = u([0, 1, 0, 1, 0]);
    let cases = [
        (
            [&abd, &abd, &abd],
            terms(&[
                ([1, 1, 1, 2, 1], 1, 6),
                ([1, 1, 0, 1, 2], -1, 6),
                ([0, 0, 2, 2, 1], -1, 6),
                ([0, 0, 1, 1, 2], 11, 36),
                ([0, 0, 0, 0, 3], -1, 12),
            ]),
        ),
        ([&ab, &ab, &letter(D)], terms(&[([0, 0, 1, 0, 1], -1, 6)])),
        (
            [&bd, &bd, &u([2, 0, 0, 0, 0])],
            terms(&[([0, 0, 0, 0, 2], 1, 18)]),
        ),
    ];
    let n = cases.len();
    let found = cases.iter().find_map(|([x, y, z], want)| {
        differ(
            "associator",
            || strs(&[*x, *y, *z]),
            want,
            &associator_u(x, y, z),
        )
    });
    (n, found)
}

fn triple_route(p: &CheckParams) -> (usize, Found) {
    let monos = PBWMonomial::up_to_degree(p.max_degree);
    let found = scan_with_oracle(&monos, p.memo_limit, |oracle, x| {
        let lx = l_of_monomial(x);
        monos.iter().find_map(|y| {
            let closed = mul_u_closed(x, y);
            let recursive = match oracle.mul_monomials(x, y) {
                Ok(v) => v,
                Err(e) => {
                    return failure(
                        "recursive oracle",
                        strs(&[x, y]),
                        "a product",
                        e.to_string(),
                    )
                }
            };
            differ(
                "closed form vs recursive oracle",
                || strs(&[x, y]),
                &closed,
                &recursive,
            )
            .or_else(|| {
                differ(
                    "closed form vs L(x) y",
                    || strs(&[x, y]),
                    &closed,
                    &lx.apply_monomial(y),
                )
            })
        })
    });
    (monos.len() * monos.len(), found)
}

fn degree_filtration(p: &CheckParams) -> (usize, Found) {
    let monos = PBWMonomial::up_to_degree(p.max_degree);
    let all = pairs(&monos);
    let found = scan(&all, |(x, y)| {
        let prod = mul_u_closed(x, y);
        let top = x.degree() + y.degree();
        if let Some((m, _)) = prod.iter().find(|(m, _)| m.degree() > top) {
            return failure(
                "degree bound",
                strs(&[x, y]),
                &format!("degree <= {top}"),
                m.to_string(),
            );
        }
        let leading: UElement = prod
            .iter()
            .filter(|(m, _)| m.degree() == top)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        differ(
            "leading term",
            || strs(&[x, y]),
            &UElement::basis(x.concat(y)),
            &leading,
        )
    });
    (all.len(), found)
}

fn cde_formula(p: &CheckParams) -> (usize, Found) {
    let cde = monomials_in(p.max_degree + 1, &[C, D, E]);
    let all = pairs(&cde);
    let found = scan(&all, |(x, y)| {
        differ(
            "cde product",
            || strs(&[x, y]),
            &mul_cde(x, y),
            &mul_u_closed(x, y),
        )
    });
    (all.len(), found)
}

fn cde_associative(p: &CheckParams) -> (usize, Found) {
    let cde: Vec<UElement> = monomials_in(p.max_degree.saturating_sub(1), &[C, D, E])
        .into_iter()
        .map(UElement::basis)
        .collect();
    let found = scan(&cde, |x| {
        cde.iter().find_map(|y| {
            cde.iter().find_map(|z| {
                differ(
                    "cde associator",
                    || strs(&[x, y, z]),
                    &UElement::zero(),
                    &associator_u(x, y, z),
                )
            })
        })
    });
    (cde.len().pow(3), found)
}

// ---------------------------------------------------------------- operators

fn operator_faithfulness(p: &CheckParams) -> (usize, Found) {
    let monos = PBWMonomial::up_to_degree(p.max_degree + 1);
    let ops: Vec<_> = Letter::ALL
        .into_iter()
        .map(|f| (f, rho(f), lmul(f), rmul(f)))
        .collect();
    let found = scan_with_oracle(&monos, p.memo_limit, |oracle, x| {
        let xe = UElement::basis(*x);
        ops.iter().find_map(|(f, r, l, rm)| {
            let fe = letter(*f);
            let inputs = || vec![x.to_string(), f.to_string()];
            let bracket = match oracle.bracket_letter(&xe, *f) {
                Ok(v) => v,
                Err(e) => return failure("recursive oracle", inputs(), "a bracket", e.to_string()),
            };
            let left = match oracle.left_multiply(*f, &xe) {
                Ok(v) => v,
                Err(e) => return failure("recursive oracle", inputs(), "a product", e.to_string()),
            };
            let right = match oracle.product(&xe, &fe) {
                Ok(v) => v,
                Err(e) => return failure("recursive oracle", inputs(), "a product", e.to_string()),
            };
            differ("rho(f) x = [x, f]", inputs, &bracket, &r.apply(&xe))
                .or_else(|| differ("L(f) x = f x", inputs, &left, &l.apply(&xe)))
                .or_else(|| differ("R(f) x = x f", inputs, &right, &rm.apply(&xe)))
        })
    });
    (monos.len() * 5, found)
}

fn op(terms: &[(&str, &str, i64, i64)]) -> Operator {
    terms
        .iter()
        .map(|&(m, d, n, den)| (OpWord::parse(m, d), q(n, den)))
        .collect()
}

/// Which family a generator of the operator algebra belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    L,
    Rho,
}

/// `L(f)` or `rho(f)`.
pub type Generator = (Side, Letter);

fn side_op(side: Side, f: Letter) -> Operator {
    match side {
        Side::L => lmul(f),
        Side::Rho => rho(f),
    }
}

fn side_name(side: Side, f: Letter) -> String {
    match side {
        Side::L => format!("L({f})"),
        Side::Rho => format!("rho({f})"),
    }
}

/// Nonzero commutators among `L(x)` and `rho(x)`, one orientation each.
pub fn commutator_table() -> Vec<(Generator, Generator, Operator)> {
    use Side::{Rho as Rh, L as Lt};
    vec![
        ((Lt, A), (Lt, B), op(&[("c", "", 1, 1), ("e", "d", -1, 3)])),
        ((Lt, A), (Lt, D), op(&[("e", "b", 1, 3)])),
        ((Lt, B), (Lt, D), op(&[("e", "a", -1, 3)])),
        ((Lt, C), (Lt, D), op(&[("e", "", 1, 1)])),
        ((Rh, A), (Rh, D), op(&[("e", "b", 1, 1)])),
        ((Rh, B), (Rh, D), op(&[("e", "a", -1, 1)])),
        ((Lt, A), (Rh, B), op(&[("c", "", -1, 1), ("e", "d", 1, 2)])),
        ((Lt, A), (Rh, D), op(&[("e", "b", -1, 2)])),
        ((Lt, B), (Rh, A), op(&[("c", "", 1, 1), ("e", "d", -1, 2)])),
        ((Lt, B), (Rh, D), op(&[("e", "a", 1, 2)])),
        ((Lt, C), (Rh, D), op(&[("e", "", -1, 1)])),
        ((Lt, D), (Rh, A), op(&[("e", "b", 1, 2)])),
        ((Lt, D), (Rh, B), op(&[("e", "a", -1, 2)])),
        ((Lt, D), (Rh, C), op(&[("e", "", 1, 1)])),
    ]
}

fn commutator_table_check(_: &CheckParams) -> (usize, Found) {
    let table = commutator_table();
    let gens: Vec<(Side, Letter)> = [Side::L, Side::Rho]
        .into_iter()
        .flat_map(|s| Letter::ALL.into_iter().map(move |f| (s, f)))
        .collect();
    let mut cases = 0;
    for &(s1, f) in &gens {
        for &(s2, g) in &gens {
            cases += 1;
            let got = commutator(&side_op(s1, f), &side_op(s2, g));
            let mut want = Operator::zero();
            for ((t1, x), (t2, y), v) in &table {
                if (*t1, *x, *t2, *y) == (s1, f, s2, g) {
                    want = v.clone();
                } else if (*t2, *y, *t1, *x) == (s1, f, s2, g) {
                    want = -v;
                }
            }
            let found = differ(
                "commutator",
                || vec![side_name(s1, f), side_name(s2, g)],
                &want,
                &got,
            );
            if found.is_some() {
                return (cases, found);
            }
        }
    }
    (cases, None)
}

/// `L(a)^s D_a^t L(b)^u D_b^v L(c)^w D_d^x L(d)^y L(e)^z`.
pub fn standard_word(e: [u32; 8]) -> Operator {
    let [s, t, uu, v, w, x, y, z] = e;
    [
        lmul(A).pow(s),
        Operator::derivation(A).pow(t),
        lmul(B).pow(uu),
        Operator::derivation(B).pow(v),
        lmul(C).pow(w),
        Operator::derivation(D).pow(x),
        lmul(D).pow(y),
        lmul(E).pow(z),
    ]
    .iter()
    .fold(Operator::identity(), |acc, f| acc.compose(f))
}

fn straightening(p: &CheckParams) -> (usize, Found) {
    let mut sampler = Sampler::new(p.seed);
    let n = p.samples.min(100);
    let words: Vec<[u32; 8]> = (0..n)
        .map(|_| std::array::from_fn(|_| sampler.below(4)))
        .collect();
    let (la, ra) = (lmul(A), rho(A));
    let found = scan(&words, |&e| {
        let [s, t, uu, v, w, x, y, z] = e;
        let xw = standard_word(e);
        let lhs =
            la.compose(&xw).scale(&q(2, 1)) - xw.compose(&la) - xw.compose(&ra) + ra.compose(&xw);
        let mut rhs = standard_word([s + 1, t, uu, v, w, x, y, z]);
        if t > 0 {
            rhs.add_scaled(
                &standard_word([s, t - 1, uu, v, w, x, y, z]),
                &q(-i64::from(t), 1),
            );
        }
        if uu > 0 {
            rhs.add_scaled(
                &standard_word([s, t, uu - 1, v, w, x + 1, y, z + 1]),
                &q(i64::from(uu), 6),
            );
        }
        if y > 0 {
            rhs.add_scaled(
                &standard_word([s, t, uu, v + 1, w, x, y - 1, z + 1]),
                &q(-i64::from(y), 6),
            );
        }
        differ("straightening", || vec![format!("{e:?}")], &rhs, &lhs)
    });
    (n, found)
}

fn pow3(n: u32) -> Rational {
    Rational::from_integer(num_bigint::BigInt::from(3u32).pow(n))
}

fn signed(c: num_bigint::BigInt, negative: bool) -> Rational {
    Rational::from_integer(if negative { -c } else { c })
}

fn word(mul: [u32; 5], der: [u32; 4]) -> OpWord {
    OpWord { mul, der }
}

/// Normal-ordered expansion of `L(b)^u`.
pub fn l_b_power(uu: u32) -> Operator {
    let mut out = Operator::zero();
    for eps in 0..=uu {
        for zeta in 0..=uu - eps {
            let rest = uu - eps - zeta;
            let c = signed(
                multinomial(uu.into(), &[eps.into(), zeta.into()]),
                zeta % 2 == 1,
            ) / pow3(rest);
            out.add_term(word([0, eps, zeta, 0, rest], [uu - eps, 0, 0, rest]), c);
        }
    }
    out
}

/// Normal-ordered expansion of `L(d)^y`.
pub fn l_d_power(y: u32) -> Operator {
    let mut out = Operator::zero();
    for eta in 0..=y {
        for theta in 0..=y - eta {
            let rest = y - eta - theta;
            let c = signed(
                multinomial(y.into(), &[eta.into(), theta.into()]),
                (y - eta) % 2 == 1,
            ) / pow3(rest);
            out.add_term(word([0, 0, 0, eta, y - eta], [rest, rest, theta, 0]), c);
        }
    }
    out
}

fn power_expansions(_: &CheckParams) -> (usize, Found) {
    for n in 0..=5 {
        let inputs = || vec![n.to_string()];
        if let Some(c) = differ("L(b)^u", inputs, &l_b_power(n), &lmul(B).pow(n)) {
            return (2 * n as usize + 1, Some(c));
        }
        if let Some(c) = differ("L(d)^y", inputs, &l_d_power(n), &lmul(D).pow(n)) {
            return (2 * n as usize + 2, Some(c));
        }
    }
    (12, None)
}

/// `L(b^j c^k d^l e^m)` as an alpha-sum over words in `L(b), L(c), L(d), L(e), D_a`.
pub fn l_of_bcde(j: u32, k: u32, l: u32, m: u32) -> Operator {
    let mut out = Operator::zero();
    for alpha in 0..=j.min(l) {
        let w = Rational::new(
            factorial(alpha.into())
                * binomial(j.into(), alpha.into())
                * binomial(l.into(), alpha.into()),
            num_bigint::BigInt::from(6u32).pow(alpha),
        );
        let chain = Operator::derivation(A)
            .pow(alpha)
            .compose(&lmul(B).pow(j - alpha))
            .compose(&lmul(C).pow(k))
            .compose(&lmul(D).pow(l - alpha))
            .compose(&lmul(E).pow(m + alpha));
        out.add_scaled(&chain, &w);
    }
    out
}

fn l_of_bcde_check(p: &CheckParams) -> (usize, Found) {
    let monos = monomials_in(p.max_degree, &[B, C, D, E]);
    let found = scan(&monos, |x| {
        let [_, j, k, l, m] = x.exps();
        differ(
            "alpha-sum",
            || strs(&[x]),
            &l_of_bcde(j, k, l, m),
            &l_of_monomial(x),
        )
    });
    (monos.len(), found)
}

fn l_of_monomial_chain(p: &CheckParams) -> (usize, Found) {
    let monos = PBWMonomial::up_to_degree(p.max_degree.min(4));
    let found = scan(&monos, |x| {
        differ(
            "L(x) by composition",
            || strs(&[x]),
            &l_of_monomial_by_composition(x),
            &l_of_monomial(x),
        )
    });
    (monos.len(), found)
}

// ---------------------------------------------------------------- nucleus

fn nucleus(p: &CheckParams) -> (usize, Found) {
    let monos: Vec<UElement> = PBWMonomial::up_to_degree(p.max_degree.saturating_sub(1))
        .into_iter()
        .map(UElement::basis)
        .collect();
    let found = scan(&monos, |x| {
        Letter::ALL.into_iter().find_map(|g| {
            let ge = letter(g);
            // (g,x,y) and friends are linear in y, so build the three maps once.
            let gx = mul_u(&ge, x);
            let xg = mul_u(x, &ge);
            monos.iter().find_map(|y| {
                let gxy = mul_u(&gx, y) - mul_u(&ge, &mul_u(x, y));
                let xgy = mul_u(&xg, y) - mul_u(x, &mul_u(&ge, y));
                let xyg = mul_u(&mul_u(x, y), &ge) - mul_u(x, &mul_u(y, &ge));
                let inputs = || strs(&[&ge, x, y]);
                differ("(g,x,y) = -(x,g,y)", inputs, &gxy, &-xgy)
                    .or_else(|| differ("(g,x,y) = (x,y,g)", inputs, &gxy, &xyg))
            })
        })
    });
    (monos.len() * monos.len() * 5, found)
}

fn associator_commutator(p: &CheckParams) -> (usize, Found) {
    let monos: Vec<UElement> = PBWMonomial::up_to_degree(p.max_degree.saturating_sub(1))
        .into_iter()
        .map(UElement::basis)
        .collect();
    let sixth = q(1, 6);
    let found = scan(&monos, |y| {
        Letter::ALL.into_iter().find_map(|f| {
            Letter::ALL.into_iter().find_map(|g| {
                let (fe, ge) = (letter(f), letter(g));
                let lhs = associator_u(&fe, &ge, y);
                let rhs = (bracket_u(&bracket_u(y, &fe), &ge)
                    - bracket_u(&bracket_u(y, &ge), &fe)
                    - bracket_u(y, &bracket_u(&fe, &ge)))
                .scale(&sixth);
                differ("(f,g,y)", || strs(&[&fe, &ge, y]), &rhs, &lhs)
            })
        })
    });
    (monos.len() * 25, found)
}

// ---------------------------------------------------------------- malcev

fn malcev_identity(p: &CheckParams) -> (usize, Found) {
    let mut sampler = Sampler::new(p.seed);
    let n = p.samples.clamp(1, 200);
    let triples: Vec<_> = (0..n)
        .map(|_| {
            (
                sampler.malcev_vector(),
                sampler.malcev_vector(),
                sampler.malcev_vector(),
            )
        })
        .collect();
    let found = scan(&triples, |(x, y, z)| {
        let (xu, yu, zu) = (embed(x), embed(y), embed(z));
        let inputs = || strs(&[&xu, &yu, &zu]);
        let lhs = bracket_u(&jacobian_u(&xu, &yu, &zu), &xu);
        let rhs = jacobian_u(&xu, &yu, &bracket_u(&xu, &zu));
        let in_m = embed(&bracket_m(&jacobian_m(x, y, z), x));
        let in_m_rhs = embed(&jacobian_m(x, y, &bracket_m(x, z)));
        differ("[J(x,y,z),x] = J(x,y,[x,z])", inputs, &lhs, &rhs)
            .or_else(|| differ("agrees with M", inputs, &in_m, &lhs))
            .or_else(|| differ("agrees with M", inputs, &in_m_rhs, &rhs))
    });
    (n, found)
}

fn bracket_embeds(p: &CheckParams) -> (usize, Found) {
    let mut sampler = Sampler::new(p.seed ^ 0x5eed);
    let mut vectors: Vec<_> = Letter::ALL
        .into_iter()
        .flat_map(|f| Letter::ALL.into_iter().map(move |g| (f.into(), g.into())))
        .collect();
    for _ in 0..p.samples.min(200) {
        vectors.push((sampler.malcev_vector(), sampler.malcev_vector()));
    }
    let found = scan(&vectors, |(x, y)| {
        let got = bracket_u(&embed(x), &embed(y));
        let want = embed(&bracket_m(x, y));
        let inputs = || strs(&[&embed(x), &embed(y)]);
        if as_malcev_vector(&got).is_none() {
            return failure(
                "bracket stays in degree one",
                inputs(),
                "degree one",
                got.to_string(),
            );
        }
        differ("[x,y] in U(M) = [x,y] in M", inputs, &want, &got)
    });
    (vectors.len(), found)
}

// ---------------------------------------------------------------- alternative

fn alternativity(p: &CheckParams) -> (usize, Found) {
    let mut sampler = Sampler::new(p.seed);
    let pairs: Vec<_> = (0..p.samples)
        .map(|_| (sampler.a_element(5, 4), sampler.a_element(5, 4)))
        .collect();
    let zero = AElement::zero();
    let found = scan(&pairs, |(x, y)| {
        let inputs = || strs(&[x, y]);
        differ("(x,x,y) = 0", inputs, &zero, &associator_a(x, x, y))
            .or_else(|| differ("(y,x,x) = 0", inputs, &zero, &associator_a(y, x, x)))
    });
    (pairs.len(), found)
}

fn type1_slot(p: &CheckParams) -> (usize, Found) {
    let mut sampler = Sampler::new(p.seed ^ 0x7e1);
    let zero = AElement::zero();
    let triples: Vec<_> = (0..p.samples)
        .map(|n| {
            let mut ms = [
                sampler.a_monomial(3),
                sampler.a_monomial(3),
                sampler.a_monomial(3),
            ];
            let slot = n % 3;
            ms[slot] = AMonomial::Type1 {
                i: sampler.below(4),
                j: sampler.below(4),
                l: sampler.below(4),
            };
            ms.map(AElement::basis)
        })
        .collect();
    let found = scan(&triples, |[x, y, z]| {
        differ(
            "(x,y,z) = 0",
            || strs(&[x, y, z]),
            &zero,
            &associator_a(x, y, z),
        )
    });
    (triples.len(), found)
}

fn type2_monomials(max_exp: u32) -> Vec<AMonomial> {
    let r = 0..=max_exp;
    let mut out = Vec::new();
    for i in r.clone() {
        for j in r.clone() {
            for k in r.clone() {
                for l in r.clone() {
                    out.push(AMonomial::Type2 { i, j, k, l });
                }
            }
        }
    }
    out
}

fn alternation(_: &CheckParams) -> (usize, Found) {
    let monos: Vec<AElement> = type2_monomials(1)
        .into_iter()
        .map(AElement::basis)
        .collect();
    let found = scan(&monos, |x| {
        monos.iter().find_map(|y| {
            monos.iter().find_map(|z| {
                let base = associator_a(x, y, z);
                let neg = -&base;
                let inputs = || strs(&[x, y, z]);
                differ("(y,x,z) = -(x,y,z)", inputs, &neg, &associator_a(y, x, z))
                    .or_else(|| differ("(x,z,y) = -(x,y,z)", inputs, &neg, &associator_a(x, z, y)))
                    .or_else(|| differ("(z,y,x) = -(x,y,z)", inputs, &neg, &associator_a(z, y, x)))
            })
        })
    });
    (monos.len().pow(3), found)
}

/// `x` with every coefficient multiplied by `scale`, if that makes them all
/// integers that fit.
fn scaled<K: Copy + Ord>(x: &crate::LinComb<K>, scale: i64) -> Option<Vec<(K, i128)>> {
    use num_traits::ToPrimitive;
    x.iter()
        .map(|(m, c)| {
            let s = c * Rational::from_integer(scale.into());
            if s.is_integer() {
                s.to_integer().to_i128().map(|n| (*m, n))
            } else {
                None
            }
        })
        .collect()
}

type Scaled = Vec<(AMonomial, i128)>;

/// Monomial products with coefficients scaled by 6, memoized per worker.
/// Every entry is exactly what `mul_a_monomials` returns.
#[derive(Default)]
struct ScaledProducts(HashMap<(AMonomial, AMonomial), Option<Scaled>>);

impl ScaledProducts {
    fn get(&mut self, x: &AMonomial, y: &AMonomial) -> Option<&[(AMonomial, i128)]> {
        self.0
            .entry((*x, *y))
            .or_insert_with(|| scaled(&mul_a_monomials(x, y), 6))
            .as_deref()
    }

    /// Whether `(xy)z - x(yz)` equals `closed`, all in integers scaled by 36.
    /// `None` when some coefficient does not fit the scaling.
    fn associator_is(
        &mut self,
        x: &AMonomial,
        y: &AMonomial,
        z: &AMonomial,
        closed: &AElement,
    ) -> Option<bool> {
        let mut acc: Vec<(AMonomial, i128)> = scaled(closed, 36)?
            .into_iter()
            .map(|(m, c)| (m, -c))
            .collect();
        let xy = self.get(x, y)?.to_vec();
        for (m, c) in xy {
            acc.extend(self.get(&m, z)?.iter().map(|&(n, d)| (n, c * d)));
        }
        let yz = self.get(y, z)?.to_vec();
        for (m, c) in yz {
            acc.extend(self.get(x, &m)?.iter().map(|&(n, d)| (n, -c * d)));
        }
        acc.sort_unstable_by_key(|t| t.0);
        Some(
            acc.chunk_by(|a, b| a.0 == b.0)
                .all(|run| run.iter().map(|t| t.1).sum::<i128>() == 0),
        )
    }
}

fn type2_closed_form(_: &CheckParams) -> (usize, Found) {
    let exact = |x: &AMonomial, y: &AMonomial, z: &AMonomial| {
        let [xe, ye, ze] = [x, y, z].map(|m| AElement::basis(*m));
        differ(
            "(x,y,z) by products vs closed form",
            || strs(&[x, y, z]),
            &associator_closed_form(x, y, z),
            &associator_a(&xe, &ye, &ze),
        )
    };
    let small = type2_monomials(2);
    let found = scan(&small, |x| {
        small
            .iter()
            .find_map(|y| small.iter().find_map(|z| exact(x, y, z)))
    });
    if found.is_some() {
        return (small.len().pow(3), found);
    }
    let monos = type2_monomials(3);
    let found = monos
        .par_iter()
        .map_init(ScaledProducts::default, |cache, x| {
            monos.iter().find_map(|y| {
                monos.iter().find_map(|z| {
                    let closed = associator_closed_form(x, y, z);
                    match cache.associator_is(x, y, z, &closed) {
                        Some(true) => None,
                        _ => exact(x, y, z),
                    }
                })
            })
        })
        .find_first(Option::is_some)
        .flatten();
    (small.len().pow(3) + monos.len().pow(3), found)
}

// ---------------------------------------------------------------- homomorphism

fn projection_homomorphism(p: &CheckParams) -> (usize, Found) {
    let monos = PBWMonomial::up_to_degree(p.max_degree);
    let projected: Vec<AElement> = monos
        .iter()
        .map(|m| project(&UElement::basis(*m)))
        .collect();
    let found = scan(&(0..monos.len()).collect::<Vec<_>>(), |&ix| {
        let x = &monos[ix];
        monos.iter().zip(&projected).find_map(|(y, py)| {
            differ(
                "project(x y) = project(x) project(y)",
                || strs(&[x, y]),
                &project(&mul_u_closed(x, y)),
                &mul_a(&projected[ix], py),
            )
        })
    });
    (monos.len() * monos.len(), found)
}

fn generators_die(_: &CheckParams) -> (usize, Found) {
    let cases = [
        [u([1, 1, 0, 0, 0]), u([1, 1, 0, 0, 0]), letter(D)],
        [u([0, 1, 0, 1, 0]), u([0, 1, 0, 1, 0]), u([2, 0, 0, 0, 0])],
    ];
    let found = cases.iter().find_map(|[x, y, z]| {
        let in_u = associator_u(x, y, z);
        let inputs = || strs(&[x, y, z]);
        if in_u.is_zero() {
            return failure("alternator in U(M)", inputs(), "nonzero", in_u.to_string());
        }
        differ(
            "alternator in A(M)",
            inputs,
            &AElement::zero(),
            &project(&in_u),
        )
    });
    (cases.len(), found)
}

// ---------------------------------------------------------------- special

fn speciality(_: &CheckParams) -> (usize, Found) {
    let report = check_speciality();
    if let Some(l) = report.collapsed_letters.first() {
        return (
            5,
            failure(
                "M embeds in A(M)",
                vec![l.to_string()],
                "not in J",
                "in J".into(),
            ),
        );
    }
    if let Some((x, y, got, want)) = report.bracket_mismatches.first() {
        return (
            30,
            differ(
                "commutator reproduces bracket",
                || vec![x.to_string(), y.to_string()],
                want,
                got,
            ),
        );
    }
    (30, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> CheckParams {
        CheckParams {
            max_degree: 3,
            samples: 40,
            seed: 1,
            memo_limit: None,
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>(), Ok(s));
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn cheap_suites_pass_at_small_parameters() {
        for s in [
            Suite::Oracle,
            Suite::Operators,
            Suite::Nucleus,
            Suite::Malcev,
            Suite::Homomorphism,
            Suite::Special,
        ] {
            let report = run(s, &small());
            assert!(report.passed(), "{s}: {:?}", report.counterexample);
            assert!(report.cases() > 0);
        }
    }

    #[test]
    fn memo_limit_is_respected_by_suites() {
        let params = CheckParams {
            memo_limit: Some(50),
            ..small()
        };
        assert!(run(Suite::Oracle, &params).passed());
    }

    #[test]
    fn scan_reports_the_first_failure_in_order() {
        let items: Vec<u32> = (0..500).collect();
        let found = scan(&items, |&n| {
            if n % 97 == 41 {
                failure("odd one", vec![n.to_string()], "", String::new())
            } else {
                None
            }
        });
        assert_eq!(found.unwrap().inputs, vec!["41"]);
    }

    #[test]
    fn differ_keeps_both_sides() {
        let one = UElement::basis(PBWMonomial::unit());
        let c = differ("p", || vec!["x".into()], &one, &-&one).unwrap();
        assert_eq!((c.expected.as_str(), c.actual.as_str()), ("1", "-1"));
        assert!(differ("p", Vec::new, &one, &one).is_none());
    }

    #[test]
    fn commutator_table_entries_are_distinct_pairs() {
        let table = commutator_table();
        assert_eq!(table.len(), 14);
        for (i, (x, y, _)) in table.iter().enumerate() {
            for (x2, y2, _) in &table[i + 1..] {
                assert!((x, y) != (x2, y2) && (x, y) != (y2, x2));
            }
        }
    }

    #[test]
    fn power_expansions_small() {
        assert_eq!(l_b_power(0), Operator::identity());
        assert_eq!(l_b_power(1), lmul(B));
        assert_eq!(l_d_power(1), lmul(D));
        assert_eq!(l_d_power(3), lmul(D).pow(3));
    }

    #[test]
    fn scaled_rejects_non_integers() {
        let half = UElement::term(PBWMonomial::unit(), q(1, 2));
        assert_eq!(scaled(&half, 2), Some(vec![(PBWMonomial::unit(), 1)]));
        assert_eq!(scaled(&half, 3), None);
    }

    #[test]
    fn fast_associator_agrees_with_direct_one() {
        let mut cache = ScaledProducts::default();
        let monos = type2_monomials(1);
        for x in &monos {
            for y in &monos {
                for z in &monos {
                    let closed = associator_closed_form(x, y, z);
                    assert_eq!(cache.associator_is(x, y, z, &closed), Some(true));
                    let shifted = &closed + &AElement::basis(AMonomial::Type1 { i: 0, j: 0, l: 0 });
                    assert_eq!(cache.associator_is(x, y, z, &shifted), Some(false));
                }
            }
        }
    }
}
