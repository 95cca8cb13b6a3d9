//! The exact sparse polynomial ring in two families of variables
//! p_1, p_2, ... and pt_1, pt_2, ... over arbitrary-precision rationals,
//! together with the inner product, the perp adjoint, the cross
//! differential operator and numerical specialization.
//!
//! The variables carry the grading deg(p_k) = deg(pt_k) = k. Everything
//! downstream (complete, Schur and skew functions, both determinant
//! formulas) is stored in this one representation, so equality of two
//! expressions is literal equality of term maps.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::complex::Complex64;
use num::rational::BigRational;
use num::{BigInt, One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::Partition;

/// A monomial in the p and pt variables: finitely many (index, exponent)
/// pairs per family, indices strictly increasing, exponents >= 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    plain: Vec<(u32, u32)>,
    tilde: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            plain: Vec::new(),
            tilde: Vec::new(),
        }
    }

    fn from_sorted(plain: Vec<(u32, u32)>, tilde: Vec<(u32, u32)>) -> Self {
        debug_assert!(plain.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(tilde.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(plain.iter().chain(&tilde).all(|&(k, e)| k >= 1 && e >= 1));
        Monomial { plain, tilde }
    }

    /// Monomial p_alpha (or pt_alpha): one factor per part.
    pub fn from_partition(alpha: &Partition, tilde: bool) -> Self {
        let mut exps: Vec<(u32, u32)> = Vec::new();
        // parts are weakly decreasing; build ascending
        for &part in alpha.parts().iter().rev() {
            match exps.last_mut() {
                Some((k, e)) if *k == part => *e += 1,
                _ => exps.push((part, 1)),
            }
        }
        if tilde {
            Monomial::from_sorted(Vec::new(), exps)
        } else {
            Monomial::from_sorted(exps, Vec::new())
        }
    }

    pub fn is_one(&self) -> bool {
        self.plain.is_empty() && self.tilde.is_empty()
    }

    /// Exponent pairs of the plain (resp. tilde) family.
    pub fn plain_exponents(&self) -> &[(u32, u32)] {
        &self.plain
    }

    pub fn tilde_exponents(&self) -> &[(u32, u32)] {
        &self.tilde
    }

    /// Graded degree: sum of k * exponent over both families.
    pub fn degree(&self) -> u64 {
        self.plain
            .iter()
            .chain(&self.tilde)
            .map(|&(k, e)| k as u64 * e as u64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            plain: merge_exponents(&self.plain, &other.plain),
            tilde: merge_exponents(&self.tilde, &other.tilde),
        }
    }

    /// Exchanges the two variable families.
    pub fn swap_families(&self) -> Monomial {
        Monomial {
            plain: self.tilde.clone(),
            tilde: self.plain.clone(),
        }
    }
}

fn merge_exponents(a: &[(u32, u32)], b: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Dense-lexicographic comparison of exponent vectors: at the first index
/// where the exponents differ, the monomial with the larger exponent
/// sorts first.
fn cmp_exponent_vectors(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => return Ordering::Less, // a has the smaller index populated
            Ordering::Greater => return Ordering::Greater,
            Ordering::Equal => {
                match b[j].1.cmp(&a[i].1) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                i += 1;
                j += 1;
            }
        }
    }
    // all shared positions matched; the side with variables left sorts first
    (i == a.len()).cmp(&(j == b.len()))
}

/// Canonical term order: total graded degree descending, then the plain
/// exponent vector, then the tilde exponent vector. This is the order in
/// which terms print and serialize.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| cmp_exponent_vectors(&self.plain, &other.plain))
            .then_with(|| cmp_exponent_vectors(&self.tilde, &other.tilde))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact sparse polynomial: a map from monomials to nonzero rational
/// coefficients. The term map is a BTreeMap in canonical monomial order,
/// so iteration, printing and serialization are deterministic.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct SymPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn one() -> Self {
        SymPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut poly = SymPoly::zero();
        poly.add_term(Monomial::one(), c);
        poly
    }

    pub fn from_integer(n: i64) -> Self {
        SymPoly::constant(BigRational::from(BigInt::from(n)))
    }

    /// The variable p_k.
    pub fn p(k: u32) -> Self {
        assert!(k >= 1);
        let mut poly = SymPoly::zero();
        poly.add_term(
            Monomial::from_sorted(vec![(k, 1)], Vec::new()),
            BigRational::one(),
        );
        poly
    }

    /// The variable pt_k.
    pub fn p_tilde(k: u32) -> Self {
        assert!(k >= 1);
        let mut poly = SymPoly::zero();
        poly.add_term(
            Monomial::from_sorted(Vec::new(), vec![(k, 1)]),
            BigRational::one(),
        );
        poly
    }

    /// The power-sum product p_alpha (or pt_alpha).
    pub fn power_sum(alpha: &Partition, tilde: bool) -> Self {
        let mut poly = SymPoly::zero();
        poly.add_term(Monomial::from_partition(alpha, tilde), BigRational::one());
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest graded degree among the terms; 0 for the zero polynomial.
    pub fn degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero();
        }
        SymPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, coeff)| (m.clone(), coeff * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> SymPoly {
        let mut out = SymPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// The involution exchanging p_k and pt_k.
    pub fn swap_families(&self) -> SymPoly {
        SymPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swap_families(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes the symbol's log-Fourier coefficients for the
    /// variables (zero beyond the symbol's support) and sums in
    /// double-precision complex arithmetic. Exactness ends here.
    pub fn evaluate(&self, spec: &SymbolSpec) -> Complex64 {
        let mut total = Complex64::new(0.0, 0.0);
        'terms: for (m, c) in &self.terms {
            let mut value = Complex64::new(rational_to_f64(c), 0.0);
            for &(k, e) in &m.plain {
                let base = spec.p_k(k);
                if base == Complex64::new(0.0, 0.0) {
                    continue 'terms;
                }
                value *= base.powu(e);
            }
            for &(k, e) in &m.tilde {
                let base = spec.p_tilde_k(k);
                if base == Complex64::new(0.0, 0.0) {
                    continue 'terms;
                }
                value *= base.powu(e);
            }
            total += value;
        }
        total
    }
}

pub(crate) fn rational_to_f64(c: &BigRational) -> f64 {
    c.to_f64().expect("rational out of f64 range")
}

impl Add for &SymPoly {
    type Output = SymPoly;

    fn add(self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;

    fn sub(self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &SymPoly {
    type Output = SymPoly;

    fn mul(self, other: &SymPoly) -> SymPoly {
        // accumulate in a hash map, rebuild the canonical ordered map once
        let mut acc: std::collections::HashMap<Monomial, BigRational> =
            std::collections::HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let product = c1 * c2;
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Vacant(slot) => {
                        slot.insert(product);
                    }
                    std::collections::hash_map::Entry::Occupied(mut slot) => {
                        *slot.get_mut() += product;
                    }
                }
            }
        }
        SymPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;

    fn neg(self) -> SymPoly {
        SymPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for SymPoly {
            type Output = SymPoly;
            fn $method(self, other: SymPoly) -> SymPoly {
                $trait::$method(&self, &other)
            }
        }
        impl $trait<&SymPoly> for SymPoly {
            type Output = SymPoly;
            fn $method(self, other: &SymPoly) -> SymPoly {
                $trait::$method(&self, other)
            }
        }
        impl $trait<SymPoly> for &SymPoly {
            type Output = SymPoly;
            fn $method(self, other: SymPoly) -> SymPoly {
                $trait::$method(self, &other)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Induced inner product on the two-family ring: power-sum monomials are
/// orthogonal, and a monomial pairs with itself to the product of the
/// centralizer orders of its two exponent patterns.
pub fn inner_product(f: &SymPoly, g: &SymPoly) -> BigRational {
    let (small, large) = if f.num_terms() <= g.num_terms() {
        (f, g)
    } else {
        (g, f)
    };
    let mut total = BigRational::zero();
    for (m, c1) in &small.terms {
        if let Some(c2) = large.terms.get(m) {
            total += c1 * c2 * BigRational::from(monomial_z(m));
        }
    }
    total
}

fn monomial_z(m: &Monomial) -> BigInt {
    let mut z = BigInt::one();
    for &(k, e) in m.plain.iter().chain(&m.tilde) {
        for i in 1..=e {
            z *= BigInt::from(k) * BigInt::from(i);
        }
    }
    z
}

/// Applies f-perp to g, where perp is the algebra homomorphism sending
/// p_n to n d/dp_n (and likewise on the tilde family), taken monomial by
/// monomial over f and linearly over its terms. This is the adjoint of
/// multiplication by f under [`inner_product`].
pub fn perp(f: &SymPoly, g: &SymPoly) -> SymPoly {
    let mut out = SymPoly::zero();
    for (mf, cf) in &f.terms {
        for (mg, cg) in &g.terms {
            if let Some((m, factor)) = perp_monomial(mf, mg) {
                out.add_term(m, cf * cg * BigRational::from(factor));
            }
        }
    }
    out
}

// Applies the operator of mf (each p_k^a |-> (k d/dp_k)^a) to mg.
// Returns the resulting monomial and the integer factor, or None if a
// derivative kills the term.
fn perp_monomial(mf: &Monomial, mg: &Monomial) -> Option<(Monomial, BigInt)> {
    let mut factor = BigInt::one();
    let plain = perp_family(&mf.plain, &mg.plain, &mut factor)?;
    let tilde = perp_family(&mf.tilde, &mg.tilde, &mut factor)?;
    Some((Monomial::from_sorted(plain, tilde), factor))
}

fn perp_family(
    op: &[(u32, u32)],
    target: &[(u32, u32)],
    factor: &mut BigInt,
) -> Option<Vec<(u32, u32)>> {
    let mut out = Vec::with_capacity(target.len());
    let mut oi = 0;
    for &(k, e) in target {
        let order = if oi < op.len() && op[oi].0 == k {
            let a = op[oi].1;
            oi += 1;
            a
        } else {
            0
        };
        if order > e {
            return None;
        }
        // (k d/dp_k)^order on p_k^e: k^order * e!/(e-order)! * p_k^(e-order)
        for step in 0..order {
            *factor *= BigInt::from(k) * BigInt::from(e - step);
        }
        if e > order {
            out.push((k, e - order));
        }
    }
    if oi < op.len() {
        // operator differentiates a variable absent from the target
        return None;
    }
    Some(out)
}

/// The cross differential operator exp(sum_k k d/dp_k d/dpt_k). On each
/// term the series terminates: acting on p_k^a pt_k^b it contributes
/// sum_i k^i i! C(a,i) C(b,i) p_k^(a-i) pt_k^(b-i) per variable index k,
/// independently across indices.
pub fn delta(f: &SymPoly) -> SymPoly {
    let mut out = SymPoly::zero();
    for (m, c) in &f.terms {
        let mut expanded = SymPoly::constant(c.clone());
        let mut rest_plain = Vec::new();
        let mut rest_tilde = Vec::new();
        let mut ti = 0;
        for &(k, a) in &m.plain {
            while ti < m.tilde.len() && m.tilde[ti].0 < k {
                rest_tilde.push(m.tilde[ti]);
                ti += 1;
            }
            if ti < m.tilde.len() && m.tilde[ti].0 == k {
                let b = m.tilde[ti].1;
                ti += 1;
                expanded = &expanded * &cross_factor(k, a, b);
            } else {
                rest_plain.push((k, a));
            }
        }
        rest_tilde.extend_from_slice(&m.tilde[ti..]);
        if !(rest_plain.is_empty() && rest_tilde.is_empty()) {
            let mut carrier = SymPoly::zero();
            carrier.add_term(
                Monomial::from_sorted(rest_plain, rest_tilde),
                BigRational::one(),
            );
            expanded = &expanded * &carrier;
        }
        out = &out + &expanded;
    }
    out
}

// exp(k d/dp_k d/dpt_k) applied to p_k^a pt_k^b.
fn cross_factor(k: u32, a: u32, b: u32) -> SymPoly {
    let mut out = SymPoly::zero();
    for i in 0..=a.min(b) {
        let mut coeff = BigInt::one();
        for step in 0..i {
            // k^i * i! * falling factorials a!/(a-i)!, b!/(b-i)! over i!
            coeff *= BigInt::from(k) * BigInt::from(a - step) * BigInt::from(b - step);
        }
        for step in 1..=i {
            coeff /= BigInt::from(step);
        }
        let mut plain = Vec::new();
        let mut tilde = Vec::new();
        if a > i {
            plain.push((k, a - i));
        }
        if b > i {
            tilde.push((k, b - i));
        }
        out.add_term(
            Monomial::from_sorted(plain, tilde),
            BigRational::from(coeff),
        );
    }
    out
}

/// Finitely supported complex values for the variables: entry `i` of each
/// list is the value of p_(i+1) (resp. pt_(i+1)). Finite support keeps
/// every downstream series absolutely summable.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct SymbolSpec {
    pub p: Vec<Complex64>,
    pub p_tilde: Vec<Complex64>,
}

impl SymbolSpec {
    pub fn new(p: Vec<Complex64>, p_tilde: Vec<Complex64>) -> Self {
        SymbolSpec { p, p_tilde }
    }

    /// Spec with real values, handy for tests and examples.
    pub fn from_real(p: &[f64], p_tilde: &[f64]) -> Self {
        SymbolSpec {
            p: p.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
            p_tilde: p_tilde.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    /// Value of p_k (1-based); zero beyond the stored support.
    pub fn p_k(&self, k: u32) -> Complex64 {
        self.p
            .get(k as usize - 1)
            .copied()
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    pub fn p_tilde_k(&self, k: u32) -> Complex64 {
        self.p_tilde
            .get(k as usize - 1)
            .copied()
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }
}

#[derive(Serialize, Deserialize)]
struct SymbolSpecWire {
    p: Vec<[f64; 2]>,
    p_tilde: Vec<[f64; 2]>,
}

/// Serializes as `{"p": [[re,im],...], "p_tilde": [[re,im],...]}`.
impl Serialize for SymbolSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let to_pairs = |v: &[Complex64]| v.iter().map(|z| [z.re, z.im]).collect();
        SymbolSpecWire {
            p: to_pairs(&self.p),
            p_tilde: to_pairs(&self.p_tilde),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymbolSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = SymbolSpecWire::deserialize(deserializer)?;
        let from_pairs = |v: Vec<[f64; 2]>| {
            v.into_iter()
                .map(|[re, im]| Complex64::new(re, im))
                .collect()
        };
        Ok(SymbolSpec {
            p: from_pairs(wire.p),
            p_tilde: from_pairs(wire.p_tilde),
        })
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    plain: BTreeMap<u32, u32>,
    tilde: BTreeMap<u32, u32>,
    coeff: String,
}

/// Serializes as a list of `{plain, tilde, coeff}` records in canonical
/// monomial order with exact fraction strings, so output is bit-stable
/// across platforms.
impl Serialize for SymPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let records: Vec<TermWire> = self
            .terms
            .iter()
            .map(|(m, c)| TermWire {
                plain: m.plain.iter().copied().collect(),
                tilde: m.tilde.iter().copied().collect(),
                coeff: c.to_string(),
            })
            .collect();
        records.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let records = Vec::<TermWire>::deserialize(deserializer)?;
        let mut poly = SymPoly::zero();
        for record in records {
            let coeff = BigRational::from_str(&record.coeff).map_err(|e| {
                D::Error::custom(format!("bad coefficient {:?}: {}", record.coeff, e))
            })?;
            let unpack = |map: BTreeMap<u32, u32>| -> Result<Vec<(u32, u32)>, D::Error> {
                let pairs: Vec<(u32, u32)> = map.into_iter().collect();
                if pairs.iter().any(|&(k, e)| k < 1 || e < 1) {
                    return Err(D::Error::custom(
                        "variable indices and exponents must be >= 1",
                    ));
                }
                Ok(pairs)
            };
            poly.add_term(
                Monomial::from_sorted(unpack(record.plain)?, unpack(record.tilde)?),
                coeff,
            );
        }
        Ok(poly)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (prefix, family) in [("p", &self.plain), ("pt", &self.tilde)] {
            for &(k, e) in family {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}{}", prefix, k)?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

/// Terms in canonical order, coefficients as reduced fractions:
/// `1/2*p1^2 - 1/2*p2`.
impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c < &BigRational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", abs, m)?;
            }
        }
        Ok(())
    }
}
