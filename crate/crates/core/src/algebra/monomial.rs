use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::AlgebraError;

/// A variable of the fixed universe.
///
/// The derived order is the variable order used everywhere:
/// `A < B < t < x1 < x2 < ... < y1 < ... < z1 < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A,
    B,
    T,
    X(u16),
    Y(u16),
    Z(u16),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::A => f.write_str("A"),
            Var::B => f.write_str("B"),
            Var::T => f.write_str("t"),
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::Z(i) => write!(f, "z{i}"),
        }
    }
}

impl FromStr for Var {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::Parse {
            pos: 0,
            msg: format!("unknown variable `{s}`"),
        };
        match s {
            "A" => return Ok(Var::A),
            "B" => return Ok(Var::B),
            "t" => return Ok(Var::T),
            _ => {}
        }
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(bad)?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
            return Err(bad());
        }
        let index: u16 = digits.parse().map_err(|_| bad())?;
        match kind {
            'x' => Ok(Var::X(index)),
            'y' => Ok(Var::Y(index)),
            'z' => Ok(Var::Z(index)),
            _ => Err(bad()),
        }
    }
}

/// A monomial with integer (possibly negative) exponents, stored sparsely as
/// `(variable, exponent)` pairs sorted by variable with no zero exponents.
///
/// Ordering is graded lexicographic: total degree first, then the exponent of
/// the smallest variable in [`Var`] order, and so on.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(Var, i32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial { factors: vec![(v, 1)] }
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Var, i32)>) -> Self {
        let mut raw: Vec<(Var, i32)> = factors.into_iter().collect();
        raw.sort_by_key(|&(v, _)| v);
        let mut factors: Vec<(Var, i32)> = Vec::with_capacity(raw.len());
        for (v, e) in raw {
            match factors.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => factors.push((v, e)),
            }
        }
        factors.retain(|&(_, e)| e != 0);
        Monomial { factors }
    }

    pub fn factors(&self) -> &[(Var, i32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree_in(&self, v: Var) -> i32 {
        self.factors
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> i64 {
        self.factors.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.factors.iter().any(|&(_, e)| e < 0)
    }

    /// Multiplies exponents pairwise: `self * other`.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.combine(other, 1)
    }

    /// `self / other` in the Laurent sense (exponents may go negative).
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.combine(other, -1)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial {
            factors: self.factors.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    /// True when `other` divides `self` in the polynomial ring.
    pub fn is_divisible_by(&self, other: &Monomial) -> bool {
        other
            .factors
            .iter()
            .all(|&(v, e)| e <= 0 || self.degree_in(v) >= e)
    }

    /// Returns the monomial with `v` removed and the exponent it had.
    pub fn split_off(&self, v: Var) -> (i32, Monomial) {
        let mut rest = self.clone();
        let e = match rest.factors.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => rest.factors.remove(i).1,
            Err(_) => 0,
        };
        (e, rest)
    }

    pub fn with_exponent(&self, v: Var, e: i32) -> Monomial {
        let mut out = self.clone();
        match out.factors.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) if e == 0 => {
                out.factors.remove(i);
            }
            Ok(i) => out.factors[i].1 = e,
            Err(_) if e == 0 => {}
            Err(i) => out.factors.insert(i, (v, e)),
        }
        out
    }

    fn combine(&self, other: &Monomial, sign: i32) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let pick = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                (None, _) => Ordering::Greater,
            };
            match pick {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, sign * b[j].1));
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + sign * b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial { factors: out }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, e))) => return 0.cmp(&e),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn var_order_is_fixed() {
        let mut vars = vec![Var::Z(1), Var::Y(2), Var::X(10), Var::X(2), Var::T, Var::B, Var::A];
        vars.sort();
        assert_eq!(
            vars,
            vec![Var::A, Var::B, Var::T, Var::X(2), Var::X(10), Var::Y(2), Var::Z(1)]
        );
    }

    #[test]
    fn var_names_round_trip() {
        for v in [Var::A, Var::B, Var::T, Var::X(1), Var::Y(12), Var::Z(3)] {
            assert_eq!(v.to_string().parse::<Var>().unwrap(), v);
        }
        assert!("x0".parse::<Var>().is_err());
        assert!("w1".parse::<Var>().is_err());
        assert!("x".parse::<Var>().is_err());
    }

    #[test]
    fn grlex_compares_degree_then_variable_order() {
        let a2 = Monomial::from_factors([(Var::A, 2)]);
        let ab = Monomial::from_factors([(Var::A, 1), (Var::B, 1)]);
        let b2 = Monomial::from_factors([(Var::B, 2)]);
        let x1 = Monomial::var(Var::X(1));
        assert!(a2 > ab && ab > b2);
        assert!(b2 > x1);
        assert!(x1 > Monomial::one());
    }

    #[test]
    fn mul_div_cancel() {
        let m = Monomial::from_factors([(Var::X(1), 2), (Var::Y(3), 1)]);
        let n = Monomial::from_factors([(Var::X(1), 1), (Var::A, 4)]);
        assert_eq!(m.mul(&n).div(&n), m);
        assert!(m.mul(&n).is_divisible_by(&n));
        assert!(!m.is_divisible_by(&n));
        assert_eq!(m.mul(&m.inverse()), Monomial::one());
    }
}
