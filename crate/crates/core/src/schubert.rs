//! Double Schubert polynomials and the two leading-form descriptions of `G_w`.

use std::collections::{HashMap, HashSet};
use std::sync::Mutex;

use num_bigint::BigInt;

use crate::algebra::{Monomial, Polynomial, Substitution, Var};
use crate::classes::{self, ClassError, Mismatch, WeightSystem};
use crate::gpd::{self, BoundarySpec, Gpd, Label, Tile};
use crate::symmetric::Permutation;

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`, computed monomial by monomial.
pub fn divided_difference(p: &Polynomial, i: usize) -> Polynomial {
    let (xi, xj) = (Var::X(i as u16), Var::X(i as u16 + 1));
    let mut terms: Vec<(Monomial, BigInt)> = Vec::new();
    for (m, c) in p.terms() {
        let (a, rest) = m.split_off(xi);
        let (b, rest) = rest.split_off(xj);
        // ∂(x_i^a x_j^b) = ± Σ x_i^p x_j^q over p + q = a + b - 1 strictly between.
        let (lo, hi, sign) = if a > b { (b, a, 1) } else { (a, b, -1) };
        for k in lo..hi {
            let e_i = if sign > 0 { a - 1 - (k - lo) } else { a + (k - lo) };
            let e_j = a + b - 1 - e_i;
            let mono = rest.with_exponent(xi, e_i).with_exponent(xj, e_j);
            terms.push((mono, c * sign));
        }
    }
    Polynomial::from_terms(terms)
}

/// `Π_{i+j≤n} (x_i - y_j)`, the double Schubert polynomial of `w_0`.
pub fn staircase(n: usize) -> Polynomial {
    let factors: Vec<Polynomial> = (1..n)
        .flat_map(|i| (1..=n - i).map(move |j| (i, j)))
        .map(|(i, j)| Polynomial::linear(&[(Var::X(i as u16), 1), (Var::Y(j as u16), -1)], 0))
        .collect();
    Polynomial::product(&factors)
}

/// Memo table of double Schubert polynomials, shareable across threads.
#[derive(Debug, Default)]
pub struct SchubertTable {
    memo: Mutex<HashMap<Permutation, Polynomial>>,
}

impl SchubertTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `S_w`, descending from `w_0` along the smallest ascent:
    /// `S_w = ∂_a S_{w s_a}` whenever `w(a) < w(a+1)`.
    pub fn get(&self, w: &Permutation) -> Polynomial {
        if let Some(p) = self.memo.lock().expect("memo lock").get(w) {
            return p.clone();
        }
        let p = match (1..w.size()).find(|&a| !w.has_descent(a)) {
            None => staircase(w.size()),
            Some(a) => divided_difference(&self.get(&w.mul_simple(a)), a),
        };
        self.memo.lock().expect("memo lock").insert(w.clone(), p.clone());
        p
    }

    /// Whether `∂_a S_{w s_a}` agrees for every ascent `a` of `w`.
    pub fn path_independent(&self, w: &Permutation) -> bool {
        let sw = self.get(w);
        (1..w.size())
            .filter(|&a| !w.has_descent(a))
            .all(|a| divided_difference(&self.get(&w.mul_simple(a)), a) == sw)
    }
}

/// The double Schubert polynomial `S_w(x_1..x_n, y_1..y_n)`.
pub fn double_schubert(w: &Permutation) -> Polynomial {
    SchubertTable::new().get(w)
}

fn x(i: usize) -> Var {
    Var::X(i as u16)
}

fn y(j: usize) -> Var {
    Var::Y(j as u16)
}

/// `x_i ↦ A + x_i`.
fn shift_by_a(n: usize) -> Substitution {
    (1..=n)
        .map(|i| (x(i), Polynomial::linear(&[(Var::A, 1), (x(i), 1)], 0)))
        .collect()
}

/// `x_i ↦ B - x_{n+1-i}`, `y_j ↦ -y_{n+1-j}`.
fn reverse_against_b(n: usize) -> Substitution {
    let mut sigma = Substitution::new();
    for i in 1..=n {
        sigma.insert(x(i), Polynomial::linear(&[(Var::B, 1), (x(n + 1 - i), -1)], 0));
        sigma.insert(y(i), Polynomial::linear(&[(y(n + 1 - i), -1)], 0));
    }
    sigma
}

/// The expected `B`-leading form `(n² - ℓ(w), S_w(A+x, y))`.
pub fn expected_b_leading(w: &Permutation) -> (i32, Polynomial) {
    let n = w.size();
    ((n * n - w.length()) as i32, double_schubert(w).substitute(&shift_by_a(n)))
}

/// The expected `A`-leading form
/// `(n² - ℓ(w), S_{w_0 w w_0}(B-x_n, …, B-x_1, -y_n, …, -y_1))`.
pub fn expected_a_leading(w: &Permutation) -> (i32, Polynomial) {
    let n = w.size();
    let s = double_schubert(&w.conjugate_by_longest());
    ((n * n - w.length()) as i32, s.substitute(&reverse_against_b(n)))
}

fn compare(actual: (i32, Polynomial), expected: (i32, Polynomial), v: Var) -> Result<(), Mismatch> {
    if actual == expected {
        return Ok(());
    }
    let restore = |(e, c): (i32, Polynomial)| c.mul_monomial(&Monomial::from_factors([(v, e)]), &BigInt::from(1));
    Err(Mismatch { left: restore(actual), right: restore(expected) })
}

/// Checks that the `B`-leading form of `G_w` is `B^{n²-ℓ(w)} S_w(A+x, y)`.
pub fn verify_b_leading(w: &Permutation) -> Result<Result<(), Mismatch>, ClassError> {
    let actual = classes::gpd_polynomial(w)?.leading_form(Var::B)?;
    Ok(compare(actual, expected_b_leading(w), Var::B))
}

/// Checks that the `A`-leading form of `G_w` is
/// `A^{n²-ℓ(w)} S_{w_0 w w_0}(B-x_n, …, B-x_1, -y_n, …, -y_1)`.
pub fn verify_a_leading(w: &Permutation) -> Result<Result<(), Mismatch>, ClassError> {
    let actual = classes::gpd_polynomial(w)?.leading_form(Var::A)?;
    Ok(compare(actual, expected_a_leading(w), Var::A))
}

/// Whether some pair of pipes crosses more than once.
pub fn has_double_crossing(g: &Gpd) -> bool {
    let mut seen: HashSet<(Label, Label)> = HashSet::new();
    for ((i, j), t) in g.squares() {
        if t != Tile::Cross {
            continue;
        }
        let (a, b) = (g.west_in(i, j).expect("cross input"), g.south_in(i, j).expect("cross input"));
        if !seen.insert((a.min(b), a.max(b))) {
            return true;
        }
    }
    false
}

/// Classic pipe dream: pipes only in the north-west triangle `i + j ≤ n + 1`
/// and no two pipes crossing twice.
pub fn is_cpd(g: &Gpd) -> bool {
    let n = g.cols();
    g.squares().all(|((i, j), t)| i + j <= n + 1 || t == Tile::Blank) && !has_double_crossing(g)
}

/// Bumpless pipe dream: no bump tiles and no two pipes crossing twice.
pub fn is_bpd(g: &Gpd) -> bool {
    g.squares().all(|(_, t)| t != Tile::Bump) && !has_double_crossing(g)
}

/// Equivariant weights summed over the fillings for `w` accepted by `keep`.
pub fn restricted_sum(w: &Permutation, keep: impl Fn(&Gpd) -> bool) -> Result<Polynomial, ClassError> {
    Ok(gpd::enumerate(&BoundarySpec::standard(w))?
        .filter(|g| keep(g))
        .map(|g| classes::weight(&g, WeightSystem::Equivariant))
        .sum())
}
