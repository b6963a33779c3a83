use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use super::{AlgebraError, Monomial, Var};

/// Ring homomorphism data: images of variables. Variables without an entry
/// map to themselves.
pub type Substitution = BTreeMap<Var, Polynomial>;

/// Sparse polynomial with big-integer coefficients.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(Monomial, BigInt)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn var(v: Var) -> Self {
        Polynomial::term(Monomial::var(v), 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// `constant + Σ coeff·var`, the shape of every tile weight.
    pub fn linear(coeffs: &[(Var, i64)], constant: i64) -> Self {
        Polynomial::from_terms(
            coeffs
                .iter()
                .map(|&(v, c)| (Monomial::var(v), BigInt::from(c)))
                .chain(std::iter::once((Monomial::one(), BigInt::from(constant)))),
        )
    }

    /// Builds a polynomial from arbitrary terms, merging repeated monomials.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c;
        }
        Polynomial::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<(Monomial, BigInt)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    /// True if some term has a negative exponent.
    pub fn is_laurent(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.has_negative_exponent())
    }

    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self
            .terms
            .iter()
            .flat_map(|(m, _)| m.factors().iter().map(|&(v, _)| v))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn degree_in(&self, v: Var) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.degree_in(v)).max()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Splits into homogeneous components, keyed by total degree.
    pub fn homogeneous_components(&self) -> BTreeMap<i64, Polynomial> {
        let mut parts: BTreeMap<i64, Vec<(Monomial, BigInt)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts.entry(m.total_degree()).or_default().push((m.clone(), c.clone()));
        }
        // Each bucket inherits the descending order.
        parts
            .into_iter()
            .map(|(d, terms)| (d, Polynomial { terms }))
            .collect()
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        // Multiplying by a monomial preserves the (graded) term order.
        Polynomial {
            terms: self.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Product of many factors, multiplied smallest-first.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Polynomial>) -> Polynomial {
        let mut fs: Vec<&Polynomial> = factors.into_iter().collect();
        fs.sort_by_key(|f| f.len());
        fs.into_iter().fold(Polynomial::one(), |acc, f| &acc * f)
    }

    /// Applies the ring homomorphism extending `sigma`.
    ///
    /// # Panics
    ///
    /// If a variable occurs with a negative exponent and its image is not a
    /// unit monomial (`±m`).
    pub fn substitute(&self, sigma: &Substitution) -> Polynomial {
        let mut powers: HashMap<(Var, i32), Polynomial> = HashMap::new();
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in &self.terms {
            let mut img = Polynomial::constant(c.clone());
            let mut fixed = Monomial::one();
            for &(v, e) in m.factors() {
                match sigma.get(&v) {
                    None => fixed = fixed.mul(&Monomial::from_factors([(v, e)])),
                    Some(image) => {
                        let p = powers
                            .entry((v, e))
                            .or_insert_with(|| power_of_image(image, e, v));
                        img = &img * &*p;
                    }
                }
            }
            for (t, d) in img.terms {
                *acc.entry(t.mul(&fixed)).or_default() += d;
            }
        }
        Polynomial::from_map(acc)
    }

    /// Largest power of `v` present and the polynomial coefficient of that power.
    pub fn leading_form(&self, v: Var) -> Result<(i32, Polynomial), AlgebraError> {
        let degree = self.degree_in(v).ok_or(AlgebraError::ZeroPolynomial)?;
        let coefficient = Polynomial::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let (e, rest) = m.split_off(v);
            (e == degree).then(|| (rest, c.clone()))
        }));
        Ok((degree, coefficient))
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Runs multivariate division with respect to graded-lex order; it
    /// succeeds exactly when `divisor` divides `self`. Laurent inputs are
    /// only supported when the divisor is a single term.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial, AlgebraError> {
        let (lead_m, lead_c) = divisor.leading_term().ok_or(AlgebraError::DivisionByZero)?;
        if divisor.len() == 1 {
            let mut terms = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                if !(c % lead_c).is_zero() {
                    return Err(AlgebraError::NotDivisible);
                }
                let q = m.div(lead_m);
                if q.has_negative_exponent() && !self.is_laurent() && !divisor.is_laurent() {
                    return Err(AlgebraError::NotDivisible);
                }
                terms.push((q, c / lead_c));
            }
            return Ok(Polynomial { terms });
        }
        if self.is_laurent() || divisor.is_laurent() {
            return Err(AlgebraError::NotDivisible);
        }
        let mut remainder: BTreeMap<Monomial, BigInt> =
            self.terms.iter().cloned().collect();
        let mut quotient = Vec::new();
        while let Some((m, c)) = remainder.pop_last() {
            if !m.is_divisible_by(lead_m) || !(&c % lead_c).is_zero() {
                return Err(AlgebraError::NotDivisible);
            }
            let qm = m.div(lead_m);
            let qc = &c / lead_c;
            for (dm, dc) in &divisor.terms[1..] {
                let key = dm.mul(&qm);
                let entry = remainder.entry(key.clone()).or_default();
                *entry -= dc * &qc;
                if entry.is_zero() {
                    remainder.remove(&key);
                }
            }
            quotient.push((qm, qc));
        }
        // Leading terms were produced in strictly descending order.
        Ok(Polynomial { terms: quotient })
    }

    /// Evaluates at an integer point.
    pub fn evaluate_int(&self, value: impl Fn(Var) -> Option<BigInt>) -> Result<BigInt, AlgebraError> {
        let mut cache: HashMap<Var, BigInt> = HashMap::new();
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.factors() {
                if e < 0 {
                    return Err(AlgebraError::NegativeExponent(v));
                }
                let x = match cache.get(&v) {
                    Some(x) => x.clone(),
                    None => {
                        let x = value(v).ok_or(AlgebraError::Unbound(v))?;
                        cache.insert(v, x.clone());
                        x
                    }
                };
                t *= num_traits::pow(x, e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Deterministic text rendering, e.g. `A^2*x1 - 3*B*y2 + 1`.
    pub fn canonical_string(&self) -> String {
        self.to_string()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut mono = Map::new();
                for &(v, e) in m.factors() {
                    mono.insert(v.to_string(), json!(e));
                }
                json!({ "coeff": c.to_string(), "monomial": mono })
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(value: &Value) -> Result<Polynomial, AlgebraError> {
        let bad = |msg: &str| AlgebraError::Json(msg.to_string());
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `terms` array"))?;
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let coeff: BigInt = t
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("term without string `coeff`"))?
                .parse()
                .map_err(|_| bad("coefficient is not a decimal integer"))?;
            let mono = t
                .get("monomial")
                .and_then(Value::as_object)
                .ok_or_else(|| bad("term without `monomial` object"))?;
            let mut factors = Vec::with_capacity(mono.len());
            for (name, e) in mono {
                let v: Var = name.parse()?;
                let e = e
                    .as_i64()
                    .and_then(|e| i32::try_from(e).ok())
                    .ok_or_else(|| bad("exponent is not a small integer"))?;
                factors.push((v, e));
            }
            out.push((Monomial::from_factors(factors), coeff));
        }
        Ok(Polynomial::from_terms(out))
    }

    fn add_signed(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut terms = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => y.0.cmp(&x.0),
                (Some(_), None) => std::cmp::Ordering::Less,
                (None, _) => std::cmp::Ordering::Greater,
            };
            match take_a {
                std::cmp::Ordering::Less => {
                    terms.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    terms.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        terms.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { terms }
    }
}

fn power_of_image(image: &Polynomial, e: i32, v: Var) -> Polynomial {
    if e >= 0 {
        return image.pow(e as u32);
    }
    match image.terms() {
        [(m, c)] if c.abs().is_one() => {
            let inv = Polynomial::term(m.inverse(), c.clone());
            inv.pow(e.unsigned_abs())
        }
        _ => panic!("cannot substitute a non-unit image for {v} under a negative exponent"),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_signed(rhs, false)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_signed(rhs, true)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let (small, large) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_monomial(m, c);
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(large.len() * small.len());
        for (ms, cs) in &small.terms {
            for (ml, cl) in &large.terms {
                *acc.entry(ms.mul(ml)).or_default() += cs * cl;
            }
        }
        Polynomial::from_map(acc)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        *self = &*self + rhs;
    }
}

impl AddAssign<Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        *self = &*self - rhs;
    }
}

impl Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for p in iter {
            for (m, c) in p.terms {
                *acc.entry(m).or_default() += c;
            }
        }
        Polynomial::from_map(acc)
    }
}

impl<'a> Sum<&'a Polynomial> for Polynomial {
    fn sum<I: Iterator<Item = &'a Polynomial>>(iter: I) -> Polynomial {
        iter.cloned().sum()
    }
}

impl From<Var> for Polynomial {
    fn from(v: Var) -> Self {
        Polynomial::var(v)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_polynomial as p;
    use super::*;

    fn x(i: u16) -> Polynomial {
        Polynomial::var(Var::X(i))
    }
    fn y(i: u16) -> Polynomial {
        Polynomial::var(Var::Y(i))
    }

    #[test]
    fn additive_inverse_vanishes() {
        let a = &x(1) - &y(1);
        let b = &y(1) - &x(1);
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn binomial_square() {
        let ab = p("A + B").unwrap();
        assert_eq!((&ab * &ab).to_string(), "A^2 + 2*A*B + B^2");
    }

    /// Naive term-pair expansion, kept separate from the hash-map product.
    fn naive_product(a: &Polynomial, b: &Polynomial) -> Vec<(Monomial, BigInt)> {
        let mut out: Vec<(Monomial, BigInt)> = Vec::new();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let m = ma.mul(mb);
                match out.iter_mut().find(|(t, _)| *t == m) {
                    Some((_, c)) => *c += ca * cb,
                    None => out.push((m, ca * cb)),
                }
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        out
    }

    #[test]
    fn product_of_two_linear_forms_has_nine_unit_terms() {
        let f = p("A + x1 - y2").unwrap();
        let g = p("A + x2 - y1").unwrap();
        let prod = &f * &g;
        let naive = naive_product(&f, &g);
        assert_eq!(naive.len(), 9);
        assert_eq!(prod.len(), 9);
        assert!(prod.terms().iter().all(|(_, c)| c.abs().is_one()));
        for (m, c) in naive {
            assert_eq!(prod.coefficient(&m), c);
        }
    }

    #[test]
    fn substitution_examples() {
        let mut s = Substitution::new();
        s.insert(Var::X(1), p("A + x1").unwrap());
        assert_eq!(p("x1 - y1").unwrap().substitute(&s), p("A + x1 - y1").unwrap());

        let mut s = Substitution::new();
        s.insert(Var::A, Polynomial::zero());
        s.insert(Var::B, Polynomial::constant(-1));
        assert_eq!(
            p("B - x2 + y2").unwrap().substitute(&s),
            -p("x2 - y2 + 1").unwrap()
        );
    }

    #[test]
    fn reversal_substitution_of_s4213() {
        let s4213 = p("(x1-y1)*(x2-y1)*(x1-y2)*(x1-y3)").unwrap();
        let mut s = Substitution::new();
        for i in 1..=4u16 {
            s.insert(Var::X(i), &Polynomial::var(Var::B) - &x(5 - i));
            s.insert(Var::Y(i), -y(5 - i));
        }
        let expected = p("(B-x4+y4)*(B-x3+y4)*(B-x4+y3)*(B-x4+y2)").unwrap();
        assert_eq!(s4213.substitute(&s), expected);
    }

    #[test]
    fn substitution_of_laurent_monomials() {
        let f = p("z1^-1*z2").unwrap();
        let mut s = Substitution::new();
        s.insert(Var::Z(1), p("-z3").unwrap());
        assert_eq!(f.substitute(&s), p("-z2*z3^-1").unwrap());
    }

    #[test]
    fn leading_form_examples() {
        let f = p("(A+B)^3*(B-x2+y2)").unwrap();
        assert_eq!(f.leading_form(Var::B).unwrap(), (4, Polynomial::one()));
        let g = p("A^2 + A*B + B^2").unwrap();
        assert_eq!(g.leading_form(Var::A).unwrap(), (2, Polynomial::one()));
        assert_eq!(Polynomial::zero().leading_form(Var::A), Err(AlgebraError::ZeroPolynomial));
        let h = p("A*x1 + 3*x2 + y1").unwrap();
        assert_eq!(h.leading_form(Var::B).unwrap(), (0, h.clone()));
    }

    #[test]
    fn exact_division_examples() {
        let ab = p("A + B").unwrap();
        let f = p("(A+B)^2*(A+x1-y2)").unwrap();
        assert_eq!(f.exact_div(&ab).unwrap(), p("(A+B)*(A+x1-y2)").unwrap());
        assert_eq!(x(1).exact_div(&y(1)), Err(AlgebraError::NotDivisible));
        assert_eq!(x(1).exact_div(&Polynomial::zero()), Err(AlgebraError::DivisionByZero));
        assert_eq!(
            p("2*x1 + 4").unwrap().exact_div(&Polynomial::constant(2)).unwrap(),
            p("x1 + 2").unwrap()
        );
        assert_eq!(
            p("x1 + 1").unwrap().exact_div(&Polynomial::constant(2)),
            Err(AlgebraError::NotDivisible)
        );
        assert_eq!(p("x1^2 - 1").unwrap().exact_div(&p("x1 + 2").unwrap()), Err(AlgebraError::NotDivisible));
    }

    #[test]
    fn evaluate_examples() {
        let f = p("(A+B)^3*(B-x2+y2)").unwrap();
        let at = |v: Var| match v {
            Var::A | Var::B => Some(BigInt::from(1)),
            _ => Some(BigInt::from(0)),
        };
        assert_eq!(f.evaluate_int(at).unwrap(), BigInt::from(8));
        assert_eq!(Polynomial::zero().evaluate_int(|_| None).unwrap(), BigInt::from(0));
        assert_eq!(x(3).evaluate_int(|_| None), Err(AlgebraError::Unbound(Var::X(3))));
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p("B + A").unwrap().to_string(), "A + B");
        assert_eq!(p("1 - 3*y2*B + x1*A^2").unwrap().to_string(), "A^2*x1 - 3*B*y2 + 1");
        assert_eq!(p("-x1").unwrap().to_string(), "-x1");
    }

    #[test]
    fn json_shape_and_round_trip() {
        let f = p("A^2*x1 - 3*B*y2 + 1").unwrap();
        let v = f.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"terms":[{"coeff":"1","monomial":{"A":2,"x1":1}},{"coeff":"-3","monomial":{"B":1,"y2":1}},{"coeff":"1","monomial":{}}]}"#
        );
        assert_eq!(Polynomial::from_json(&v).unwrap(), f);
        assert!(Polynomial::from_json(&serde_json::json!({"terms": [{"coeff": 3}]})).is_err());
    }

    #[test]
    fn homogeneous_components_split() {
        let f = p("x1 + x2*y1 + 1 - y1").unwrap();
        let parts = f.homogeneous_components();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[&1], p("x1 - y1").unwrap());
        assert_eq!(parts.values().cloned().sum::<Polynomial>(), f);
    }
}
