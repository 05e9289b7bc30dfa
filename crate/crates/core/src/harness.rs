//! Exhaustive verification of the sign-imbalance identities.
//!
//! Every check returns a [`VerificationReport`] pairing an exactly computed
//! value with the value the identity predicts. Imbalance tables are computed
//! once per `n` and shared between checks through a [`Harness`].

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::ops::RangeInclusive;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::imbalance::{imbalance, stanley_polynomial_of, ImbalanceRecord};
use crate::poly::MonomialMap;
use crate::rs::{complementary_word, enumerate_sorted_words, insert_word, rs, sigma, tau, Permutation};
use crate::shape::{fourling_shapes, partitions, CellSet, Shape, SkewShape};
use crate::tableau::{enumerate_chess, enumerate_syt, syt_count, Sign};

/// An exact value produced by a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Quantity {
    Int(i64),
    Poly(MonomialMap),
    List(Vec<Quantity>),
}

impl Quantity {
    fn ints(values: impl IntoIterator<Item = i64>) -> Self {
        Quantity::List(values.into_iter().map(Quantity::Int).collect())
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Int(v) => write!(f, "{v}"),
            Quantity::Poly(p) => write!(f, "{p}"),
            Quantity::List(items) => {
                f.write_str("[")?;
                for (i, q) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{q}")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Quantity::Int(v) => s.serialize_i64(*v),
            Quantity::Poly(p) => s.collect_str(p),
            Quantity::List(items) => {
                let mut seq = s.serialize_seq(Some(items.len()))?;
                for q in items {
                    seq.serialize_element(q)?;
                }
                seq.end()
            }
        }
    }
}

/// Outcome of one check instance.
///
/// `expected` is `None` only for instances outside a claim's range, which are
/// reported without being asserted. Otherwise `pass` is `computed == expected`.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim_id: &'static str,
    pub parameters: BTreeMap<String, String>,
    pub computed: Quantity,
    pub expected: Option<Quantity>,
    pub pass: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    fn new(claim_id: &'static str, parameters: Params, computed: Quantity, expected: Quantity) -> Self {
        VerificationReport {
            claim_id,
            parameters: parameters.0,
            pass: computed == expected,
            computed,
            expected: Some(expected),
            elapsed: Duration::ZERO,
        }
    }

    fn unasserted(claim_id: &'static str, parameters: Params, computed: Quantity) -> Self {
        VerificationReport {
            claim_id,
            parameters: parameters.0,
            computed,
            expected: None,
            pass: true,
            elapsed: Duration::ZERO,
        }
    }

    fn timed(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }

    pub fn parameter_string(&self) -> String {
        self.parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Default)]
struct Params(BTreeMap<String, String>);

impl Params {
    fn with(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.0.insert(key.to_string(), value.to_string());
        self
    }
}

fn n_param(n: usize) -> Params {
    Params::default().with("n", n)
}

fn cells_string(cells: &CellSet) -> String {
    let inner: Vec<String> = cells.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// The empty shape alone contributes `+1`, so the class sums are only
/// asserted from `n = 2` on.
fn even_report(claim_id: &'static str, n: usize, params: Params, computed: Quantity, expected: Quantity) -> VerificationReport {
    if n == 0 {
        VerificationReport::unasserted(claim_id, params, computed)
    } else {
        VerificationReport::new(claim_id, params, computed, expected)
    }
}

/// Binomial coefficient with overflow checking.
pub fn binomial(n: u64, k: u64) -> Result<i64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as i64)
            .ok_or(Error::Overflow("binomial coefficient"))?
            / (i as i64 + 1);
    }
    Ok(acc)
}

fn checked_sum(values: impl IntoIterator<Item = i64>, what: &'static str) -> Result<i64> {
    values
        .into_iter()
        .try_fold(0i64, |acc, v| acc.checked_add(v))
        .ok_or(Error::Overflow(what))
}

fn square(i: i64) -> Result<i64> {
    i.checked_mul(i).ok_or(Error::Overflow("squared imbalance"))
}

fn v_sign(v: usize) -> i64 {
    if v % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Every claim the harness can sweep, by identifier.
pub const CLAIMS: [&str; 13] = [
    "total",
    "conj-a",
    "conj-b",
    "hooks",
    "jonas",
    "betterb",
    "bettererb",
    "special23",
    "special",
    "horizontal",
    "sigma",
    "transpose",
    "fourling",
];

/// Imbalance tables shared across checks.
#[derive(Default)]
pub struct Harness {
    tables: Mutex<HashMap<usize, Arc<Vec<ImbalanceRecord>>>>,
}

impl Harness {
    pub fn new() -> Self {
        Harness::default()
    }

    /// Records for every partition of `n`, computed once.
    pub fn table(&self, n: usize) -> Result<Arc<Vec<ImbalanceRecord>>> {
        if let Some(t) = self.tables.lock().unwrap().get(&n) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(crate::imbalance::imbalance_table(n)?);
        Ok(Arc::clone(
            self.tables.lock().unwrap().entry(n).or_insert(table),
        ))
    }

    fn record(&self, shape: &Shape) -> Result<ImbalanceRecord> {
        let table = self.table(shape.size())?;
        Ok(table
            .iter()
            .find(|r| &r.shape == shape)
            .expect("every shape appears in its table")
            .clone())
    }

    /// Sum of all imbalances of `n`-shapes against `2^floor(n/2)`.
    pub fn verify_total_imbalance(&self, n: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        let table = self.table(n)?;
        let total = checked_sum(table.iter().map(|r| r.imbalance), "total imbalance")?;
        let expected = 1i64
            .checked_shl((n / 2) as u32)
            .filter(|_| n / 2 < 63)
            .ok_or(Error::Overflow("2^floor(n/2)"))?;
        Ok(VerificationReport::new("total", n_param(n), Quantity::Int(total), Quantity::Int(expected)).timed(start))
    }

    pub fn verify_conjecture_a(&self, n: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        let computed = stanley_polynomial_of(&self.table(n)?)?;
        let expected = crate::imbalance::expected_polynomial(n)?;
        Ok(
            VerificationReport::new("conj-a", n_param(n), Quantity::Poly(computed), Quantity::Poly(expected))
                .timed(start),
        )
    }

    /// `sum (-1)^v t^d I^2` as a polynomial in `t`. Rejects `n = 1 (mod 4)`;
    /// `n = 0` is reported without assertion.
    pub fn verify_conjecture_b(&self, n: usize) -> Result<VerificationReport> {
        if n % 4 == 1 {
            return Err(Error::Precondition(format!("n = {n} is 1 mod 4")));
        }
        let start = Instant::now();
        let mut poly = MonomialMap::zero();
        for r in self.table(n)?.iter() {
            poly.add_term((0, r.d as u32, 0), v_sign(r.v) * square(r.imbalance)?)?;
        }
        let report = if n == 0 {
            VerificationReport::unasserted("conj-b", n_param(n), Quantity::Poly(poly))
        } else {
            VerificationReport::new("conj-b", n_param(n), Quantity::Poly(poly), Quantity::Poly(MonomialMap::zero()))
        };
        Ok(report.timed(start))
    }

    /// The hook part of the three-variable sum equals `(q + x)^floor(n/2)`.
    pub fn verify_prop_hooks(&self, n: usize) -> Result<VerificationReport> {
        if n == 0 {
            return Err(Error::Precondition("hooks need n >= 1".into()));
        }
        let start = Instant::now();
        let hooks: Vec<ImbalanceRecord> = self
            .table(n)?
            .iter()
            .filter(|r| r.shape.is_hook())
            .cloned()
            .collect();
        debug_assert_eq!(hooks.len(), n);
        let mut poly = MonomialMap::zero();
        for r in &hooks {
            poly.add_term((r.v as u32, 0, r.h as u32), r.imbalance)?;
        }
        let expected = crate::imbalance::expected_polynomial(n)?;
        Ok(VerificationReport::new("hooks", n_param(n), Quantity::Poly(poly), Quantity::Poly(expected)).timed(start))
    }

    /// Sum of imbalances over shapes with fourling body `body`, `strip` strip
    /// cells, `hs = h` and `vs = v` vanishes.
    pub fn verify_theorem_jonas(&self, body: &Shape, h: usize, v: usize, strip: usize) -> Result<VerificationReport> {
        if body.is_empty() || !body.is_fourling() {
            return Err(Error::Precondition(format!("{body} is not a non-empty fourling shape")));
        }
        let start = Instant::now();
        let n = body.size() + strip;
        let table = self.table(n)?;
        let class: Vec<&ImbalanceRecord> = table
            .iter()
            .filter(|r| r.hs == h && r.vs == v && &r.shape.fourling_body() == body)
            .collect();
        let sum = checked_sum(class.iter().map(|r| r.imbalance), "class sum")?;
        let params = Params::default()
            .with("D", body)
            .with("h", h)
            .with("v", v)
            .with("s", strip)
            .with("class_size", class.len());
        Ok(VerificationReport::new("jonas", params, Quantity::Int(sum), Quantity::Int(0)).timed(start))
    }

    /// Every `(D, h, v, s)` with `|D| + s = n`, followed by a coverage report:
    /// the classes together with the hooks account for every `n`-shape.
    pub fn sweep_theorem_jonas(&self, n: usize) -> Result<Vec<VerificationReport>> {
        let mut instances = Vec::new();
        for body in fourling_shapes(n) {
            let s = n - body.size();
            for h in 0..=s / 2 {
                for v in 0..=s / 2 {
                    instances.push((body.clone(), h, v, s));
                }
            }
        }
        let mut reports: Vec<VerificationReport> = instances
            .par_iter()
            .map(|(body, h, v, s)| self.verify_theorem_jonas(body, *h, *v, *s))
            .collect::<Result<_>>()?;
        let start = Instant::now();
        let table = self.table(n)?;
        let class_total: usize = reports
            .iter()
            .map(|r| r.parameters["class_size"].parse::<usize>().unwrap())
            .sum();
        let hooks = table.iter().filter(|r| r.shape.fourling_body().is_empty()).count();
        reports.push(
            VerificationReport::new(
                "jonas",
                n_param(n).with("check", "coverage"),
                Quantity::Int((class_total + hooks) as i64),
                Quantity::Int(table.len() as i64),
            )
            .timed(start),
        );
        Ok(reports)
    }

    /// `sum (-1)^v I^2` over `n`-shapes with fourling body `body`, `n` even.
    pub fn verify_theorem_betterb(&self, body: &Shape, n: usize) -> Result<VerificationReport> {
        if n % 2 == 1 {
            return Err(Error::Precondition(format!("n = {n} is odd")));
        }
        if !body.is_fourling() {
            return Err(Error::Precondition(format!("{body} is not a fourling shape")));
        }
        let start = Instant::now();
        let table = self.table(n)?;
        let terms = table
            .iter()
            .filter(|r| &r.shape.fourling_body() == body)
            .map(|r| Ok(v_sign(r.v) * square(r.imbalance)?))
            .collect::<Result<Vec<i64>>>()?;
        let params = n_param(n).with("D", body).with("class_size", terms.len());
        let sum = checked_sum(terms, "fourling-body class")?;
        Ok(even_report("betterb", n, params, Quantity::Int(sum), Quantity::Int(0)).timed(start))
    }

    pub fn sweep_theorem_betterb(&self, n: usize) -> Result<Vec<VerificationReport>> {
        std::iter::once(Shape::empty())
            .chain(fourling_shapes(n))
            .map(|body| self.verify_theorem_betterb(&body, n))
            .collect()
    }

    /// `sum (-1)^v I^2` over `n`-shapes whose black cells are exactly `black`.
    pub fn verify_theorem_bettererb(&self, black: &CellSet, n: usize) -> Result<VerificationReport> {
        if n % 2 == 1 {
            return Err(Error::Precondition(format!("n = {n} is odd")));
        }
        let start = Instant::now();
        let table = self.table(n)?;
        let terms = table
            .iter()
            .filter(|r| &r.shape.black_cells() == black)
            .map(|r| Ok(v_sign(r.v) * square(r.imbalance)?))
            .collect::<Result<Vec<i64>>>()?;
        let params = n_param(n).with("B", cells_string(black)).with("class_size", terms.len());
        let sum = checked_sum(terms, "black-set class")?;
        Ok(even_report("bettererb", n, params, Quantity::Int(sum), Quantity::Int(0)).timed(start))
    }

    /// Groups every `n`-shape by its black cells; one report whose computed
    /// value lists the group sums in order of first appearance.
    pub fn sweep_theorem_bettererb(&self, n: usize) -> Result<VerificationReport> {
        if n % 2 == 1 {
            return Err(Error::Precondition(format!("n = {n} is odd")));
        }
        let start = Instant::now();
        let table = self.table(n)?;
        let mut order: Vec<CellSet> = Vec::new();
        let mut sums: HashMap<CellSet, i64> = HashMap::new();
        for r in table.iter() {
            let key = r.shape.black_cells();
            let term = v_sign(r.v) * square(r.imbalance)?;
            match sums.get_mut(&key) {
                Some(s) => *s = s.checked_add(term).ok_or(Error::Overflow("black-set class"))?,
                None => {
                    order.push(key.clone());
                    sums.insert(key, term);
                }
            }
        }
        let computed = Quantity::ints(order.iter().map(|b| sums[b]));
        let expected = Quantity::ints(order.iter().map(|_| 0));
        let params = n_param(n).with("groups", order.len());
        Ok(even_report("bettererb", n, params, computed, expected).timed(start))
    }

    /// For `n = 2, 3 (mod 4)`: every shape has `I = 0` or `v != h (mod 2)`, and
    /// `sum (-1)^v t^d I^2 = 0`. The computed value is
    /// `[violations, polynomial]`.
    pub fn verify_theorem_special23(&self, n: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        let (violations, poly) = self.special23_parts(n, |r| {
            let mut p = MonomialMap::zero();
            p.add_term((0, r.d as u32, 0), square(r.imbalance)?)?;
            Ok(p)
        })?;
        let computed = Quantity::List(vec![Quantity::Int(violations), Quantity::Poly(poly)]);
        let expected = Quantity::List(vec![Quantity::Int(0), Quantity::Poly(MonomialMap::zero())]);
        Ok(VerificationReport::new("special23", n_param(n), computed, expected).timed(start))
    }

    /// `sum (-1)^v F(shape)` for a caller-supplied `F`. The hypotheses
    /// `F(shape) = F(conjugate)` and `I = 0 => F = 0` are checked on the
    /// `n`-shapes and rejected with a precondition error if they fail.
    pub fn verify_theorem_special23_with<F>(&self, n: usize, f: F) -> Result<VerificationReport>
    where
        F: Fn(&ImbalanceRecord) -> Result<MonomialMap>,
    {
        let start = Instant::now();
        let table = self.table(n)?;
        let by_shape: HashMap<&Shape, &ImbalanceRecord> = table.iter().map(|r| (&r.shape, r)).collect();
        for r in table.iter() {
            let value = f(r)?;
            if r.imbalance == 0 && !value.is_zero() {
                return Err(Error::Precondition(format!("F({}) is non-zero but I = 0", r.shape)));
            }
            if value != f(by_shape[&r.shape.conjugate()])? {
                return Err(Error::Precondition(format!("F differs on {} and its conjugate", r.shape)));
            }
        }
        let (violations, poly) = self.special23_parts(n, f)?;
        let computed = Quantity::List(vec![Quantity::Int(violations), Quantity::Poly(poly)]);
        let expected = Quantity::List(vec![Quantity::Int(0), Quantity::Poly(MonomialMap::zero())]);
        Ok(VerificationReport::new("special23", n_param(n).with("F", "custom"), computed, expected).timed(start))
    }

    fn special23_parts<F>(&self, n: usize, f: F) -> Result<(i64, MonomialMap)>
    where
        F: Fn(&ImbalanceRecord) -> Result<MonomialMap>,
    {
        if !matches!(n % 4, 2 | 3) {
            return Err(Error::Precondition(format!("n = {n} is not 2 or 3 mod 4")));
        }
        let table = self.table(n)?;
        let violations = table
            .iter()
            .filter(|r| r.imbalance != 0 && r.v % 2 == r.h % 2)
            .count() as i64;
        let mut poly = MonomialMap::zero();
        for r in table.iter() {
            let value = f(r)?;
            for (&exps, &c) in value.terms() {
                poly.add_term(exps, v_sign(r.v) * c)?;
            }
        }
        Ok((violations, poly))
    }

    /// Largest `n` for which [`Harness::verify_theorem_special`] also walks
    /// all of `S_n`.
    pub const PERMUTATION_SIDE_MAX_N: usize = 7;

    /// `sum (-1)^v I^2 = 0` for `n >= 2`. Up to
    /// [`Self::PERMUTATION_SIDE_MAX_N`] the computed value is
    /// `[shape side, RS side, sum of sgn over S_n]`, where the RS side sums
    /// `(-1)^v sgn(P) sgn(Q)` over the RS images of all permutations.
    pub fn verify_theorem_special(&self, n: usize) -> Result<VerificationReport> {
        if n < 2 {
            return Err(Error::Precondition(format!("n = {n} is below 2")));
        }
        let start = Instant::now();
        let table = self.table(n)?;
        let shape_side = checked_sum(
            table
                .iter()
                .map(|r| Ok(v_sign(r.v) * square(r.imbalance)?))
                .collect::<Result<Vec<i64>>>()?,
            "signed square sum",
        )?;
        let report = if n <= Self::PERMUTATION_SIDE_MAX_N {
            let (rs_side, direct) = Permutation::all(n)
                .par_bridge()
                .map(|pi| {
                    let (p, q) = rs(&pi);
                    (v_sign(p.shape().v_count()) * (p.sign() * q.sign()).value(), pi.sign().value())
                })
                .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
            VerificationReport::new(
                "special",
                n_param(n),
                Quantity::ints([shape_side, rs_side, direct]),
                Quantity::ints([0, 0, 0]),
            )
        } else {
            VerificationReport::new("special", n_param(n), Quantity::Int(shape_side), Quantity::Int(0))
        };
        Ok(report.timed(start))
    }

    /// `sgn(pi) = (-1)^v sgn(P) sgn(Q)` for each given permutation; the
    /// computed value counts failures.
    pub fn verify_rs_sign<I>(&self, label: &str, perms: I) -> VerificationReport
    where
        I: IntoIterator<Item = Permutation>,
    {
        let start = Instant::now();
        let mut checked = 0usize;
        let mut failures = 0i64;
        for pi in perms {
            let (p, q) = rs(&pi);
            let predicted = Sign::from_parity(p.shape().v_count()) * p.sign() * q.sign();
            checked += 1;
            if predicted != pi.sign() {
                failures += 1;
            }
        }
        let params = Params::default().with("perms", label).with("checked", checked);
        VerificationReport::new("rs-sign", params, Quantity::Int(failures), Quantity::Int(0)).timed(start)
    }

    /// `sum of I over H(shape, k) = C(n/2 + floor(k/2), floor(k/2)) * I(shape)`
    /// for a shape whose strip is made of vertical dominoes.
    pub fn verify_prop_horizontal(&self, shape: &Shape, k: usize) -> Result<VerificationReport> {
        if !strip_is_vertical(shape) {
            return Err(Error::Precondition(format!("strip of {shape} is not made of vertical dominoes")));
        }
        let start = Instant::now();
        let n = shape.size();
        let body = shape.fourling_body();
        let vs = shape.vs_count();
        let table = self.table(n + k)?;
        let class: Vec<&ImbalanceRecord> = table
            .iter()
            .filter(|r| {
                shape.is_subshape_of(&r.shape) && r.vs == vs && r.hs == k / 2 && r.shape.fourling_body() == body
            })
            .collect();
        let sum = checked_sum(class.iter().map(|r| r.imbalance), "horizontal class")?;
        let own = self.record(shape)?.imbalance;
        let expected = binomial((n / 2 + k / 2) as u64, (k / 2) as u64)?
            .checked_mul(own)
            .ok_or(Error::Overflow("horizontal expected value"))?;
        let params = Params::default()
            .with("lambda", shape)
            .with("k", k)
            .with("class_size", class.len());
        Ok(VerificationReport::new("horizontal", params, Quantity::Int(sum), Quantity::Int(expected)).timed(start))
    }

    /// All `(shape, k)` with `|shape| + k = n` meeting the strip precondition.
    pub fn sweep_prop_horizontal(&self, n: usize) -> Result<Vec<VerificationReport>> {
        let instances: Vec<(Shape, usize)> = (0..=n)
            .flat_map(|size| partitions(size).filter(strip_is_vertical).map(move |s| (s, n - size)))
            .collect();
        instances
            .par_iter()
            .map(|(shape, k)| self.verify_prop_horizontal(shape, *k))
            .collect()
    }

    /// Sum of `sigma` over sorted `j`-words in `1..=i` against its closed form.
    pub fn verify_lemma_sigma(&self, i: usize, j: usize) -> Result<VerificationReport> {
        if j > i {
            return Err(Error::Precondition(format!("j = {j} exceeds i = {i}")));
        }
        let start = Instant::now();
        let computed = checked_sum(enumerate_sorted_words(i, j).map(|w| sigma(&w).value()), "sigma sum")?;
        let expected = sigma_closed_form(i, j)?;
        let params = Params::default().with("i", i).with("j", j);
        Ok(VerificationReport::new("sigma", params, Quantity::Int(computed), Quantity::Int(expected)).timed(start))
    }

    /// `I(conjugate) = (-1)^d I` for every `n`-shape; counts failures.
    pub fn verify_prop_transpose(&self, n: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        let table = self.table(n)?;
        let by_shape: HashMap<&Shape, i64> = table.iter().map(|r| (&r.shape, r.imbalance)).collect();
        let failures = table
            .iter()
            .filter(|r| by_shape[&r.shape.conjugate()] != v_sign(r.d) * r.imbalance)
            .count() as i64;
        let params = n_param(n).with("shapes", table.len());
        Ok(VerificationReport::new("transpose", params, Quantity::Int(failures), Quantity::Int(0)).timed(start))
    }

    /// For every non-empty fourling shape with at most `max_cells` cells: its
    /// imbalance, then the total number of chess tableaux on all of them.
    pub fn verify_lemma_fourlingshape(&self, max_cells: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        let shapes = fourling_shapes(max_cells);
        let values = shapes
            .par_iter()
            .map(|d| Ok((imbalance(d)?, enumerate_chess(d).count() as i64)))
            .collect::<Result<Vec<(i64, i64)>>>()?;
        let chess_total: i64 = values.iter().map(|v| v.1).sum();
        let computed = Quantity::List(vec![
            Quantity::ints(values.iter().map(|v| v.0)),
            Quantity::Int(chess_total),
        ]);
        let expected = Quantity::List(vec![Quantity::ints(values.iter().map(|_| 0)), Quantity::Int(0)]);
        let params = Params::default().with("max_cells", max_cells).with("shapes", shapes.len());
        Ok(VerificationReport::new("fourling", params, computed, expected).timed(start))
    }

    /// Chess-pruned imbalances against full enumeration for every `n`-shape.
    pub fn verify_lemma_chess(&self, n: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        let table = self.table(n)?;
        let full = table
            .par_iter()
            .map(|r| imbalance(&r.shape))
            .collect::<Result<Vec<i64>>>()?;
        let computed = Quantity::ints(table.iter().map(|r| r.imbalance));
        Ok(VerificationReport::new("chess", n_param(n), computed, Quantity::ints(full)).timed(start))
    }

    /// Shapes with non-zero imbalance have `black - white` in `{0, 1}` and
    /// `hs + vs = floor(s / 2)`; counts failures.
    pub fn verify_prop_color_balance(&self, n: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        let table = self.table(n)?;
        let failures = table
            .iter()
            .filter(|r| r.imbalance != 0)
            .filter(|r| {
                let diff = r.black as i64 - r.white as i64;
                !(0..=1).contains(&diff) || r.hs + r.vs != r.shape.strip_size() / 2
            })
            .count() as i64;
        let params = n_param(n).with("shapes", table.len());
        Ok(VerificationReport::new("color-balance", params, Quantity::Int(failures), Quantity::Int(0)).timed(start))
    }

    /// Inserting the complementary `k`-word into each tableau on `shape` with
    /// entries in `1..=n+k`. Computed value is
    /// `[failures, distinct images, domain size]`; expected is
    /// `[0, target, target]` where `target` counts standard tableaux on
    /// `(n+k)`-shapes containing `shape` whose added cells hold no vertical
    /// domino. A failure is an image that is not a standard tableau on such a
    /// shape, or whose sign breaks `sgn(T <- w) = sigma(w) tau sgn(T)`.
    pub fn verify_word_insertion(&self, shape: &Shape, k: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        let n = shape.size();
        let m = n + k;
        let syts: Vec<_> = enumerate_syt(shape).collect();
        let mut images = HashSet::new();
        let mut failures = 0i64;
        let mut domain = 0i64;
        for missing in enumerate_sorted_words(m, k) {
            let present: Vec<u32> = (1..=m as u32).filter(|x| !missing.letters().contains(x)).collect();
            for syt in &syts {
                let t = syt.relabel(&present);
                domain += 1;
                let w = complementary_word(&t, k, m)?;
                let image = insert_word(&t, &w)?;
                let mu = image.shape().clone();
                let ok_shape = shape.is_subshape_of(&mu)
                    && SkewShape::new(mu.clone(), shape.clone())?.v_count() == 0
                    && image.is_standard();
                let ok_sign = image.sign() == sigma(&w) * tau(&mu, shape)? * t.sign();
                if !(ok_shape && ok_sign) {
                    failures += 1;
                }
                images.insert(image);
            }
        }
        let mut target = 0i64;
        for mu in partitions(m) {
            if shape.is_subshape_of(&mu) && SkewShape::new(mu.clone(), shape.clone())?.v_count() == 0 {
                target += i64::try_from(u64::try_from(&syt_count(&mu)).map_err(|_| Error::Overflow("syt count"))?)
                    .map_err(|_| Error::Overflow("syt count"))?;
            }
        }
        let params = Params::default().with("lambda", shape).with("k", k);
        Ok(VerificationReport::new(
            "word-insertion",
            params,
            Quantity::ints([failures, images.len() as i64, domain]),
            Quantity::ints([0, target, target]),
        )
        .timed(start))
    }

    /// Runs the sweep for `claim` over `range`. Values of `n` outside a
    /// claim's hypotheses are skipped.
    pub fn sweep(&self, claim: &str, range: RangeInclusive<usize>) -> Result<Vec<VerificationReport>> {
        let ns: Vec<usize> = range.clone().collect();
        let mut out = Vec::new();
        match claim {
            "all" => {
                for c in CLAIMS {
                    out.extend(self.sweep(c, range.clone())?);
                }
            }
            "total" => out = self.each(&ns, |n| self.verify_total_imbalance(n))?,
            "conj-a" => out = self.each(&ns, |n| self.verify_conjecture_a(n))?,
            "conj-b" => {
                let ns: Vec<usize> = ns.into_iter().filter(|n| n % 4 != 1).collect();
                out = self.each(&ns, |n| self.verify_conjecture_b(n))?;
            }
            "hooks" => {
                let ns: Vec<usize> = ns.into_iter().filter(|&n| n >= 1).collect();
                out = self.each(&ns, |n| self.verify_prop_hooks(n))?;
            }
            "jonas" => {
                for n in ns {
                    out.extend(self.sweep_theorem_jonas(n)?);
                }
            }
            "betterb" => {
                for n in ns.into_iter().filter(|n| n % 2 == 0) {
                    out.extend(self.sweep_theorem_betterb(n)?);
                }
            }
            "bettererb" => {
                let ns: Vec<usize> = ns.into_iter().filter(|n| n % 2 == 0).collect();
                out = self.each(&ns, |n| self.sweep_theorem_bettererb(n))?;
            }
            "special23" => {
                let ns: Vec<usize> = ns.into_iter().filter(|n| matches!(n % 4, 2 | 3)).collect();
                out = self.each(&ns, |n| self.verify_theorem_special23(n))?;
            }
            "special" => {
                let ns: Vec<usize> = ns.into_iter().filter(|&n| n >= 2).collect();
                out = self.each(&ns, |n| self.verify_theorem_special(n))?;
            }
            "horizontal" => {
                for n in ns {
                    out.extend(self.sweep_prop_horizontal(n)?);
                }
            }
            "sigma" => {
                for i in ns {
                    for j in 0..=i {
                        out.push(self.verify_lemma_sigma(i, j)?);
                    }
                }
            }
            "transpose" => out = self.each(&ns, |n| self.verify_prop_transpose(n))?,
            "fourling" => {
                if let Some(&max) = ns.last() {
                    out.push(self.verify_lemma_fourlingshape(max)?);
                }
            }
            other => return Err(Error::Precondition(format!("unknown claim {other:?}"))),
        }
        Ok(out)
    }

    fn each<F>(&self, ns: &[usize], f: F) -> Result<Vec<VerificationReport>>
    where
        F: Fn(usize) -> Result<VerificationReport> + Sync,
    {
        ns.par_iter().map(|&n| f(n)).collect()
    }
}

/// Strip consists only of vertical dominoes.
pub fn strip_is_vertical(shape: &Shape) -> bool {
    shape.hs_count() == 0 && shape.strip_size() == 2 * shape.vs_count()
}

/// `0` if `i` is even and `j` odd, else `(-1)^floor(j/2) C(floor(i/2), floor(j/2))`.
pub fn sigma_closed_form(i: usize, j: usize) -> Result<i64> {
    if i % 2 == 0 && j % 2 == 1 {
        return Ok(0);
    }
    Ok(v_sign(j / 2) * binomial((i / 2) as u64, (j / 2) as u64)?)
}
