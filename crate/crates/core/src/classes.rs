//! Weights of pipe dreams and the classes built from them.
//!
//! Row `i` of a rectangle carries the variable `x_i`, column `j` carries
//! `y_j`. On the heap of a word the two sides of the square for letter `p`
//! carry `z_{u(a)}` and `z_{u(a+1)}`, where `u` is the product of the
//! letters before `p` and `a` is the letter itself.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{AlgebraError, Monomial, Polynomial, RationalFunction, Substitution, Var};
use crate::gpd::{self, BoundarySpec, EdgeLabel, Gpd, GpdError, Tile};
use crate::symmetric::{PartialPermutation, Permutation, Word};

#[derive(Debug, Error)]
pub enum ClassError {
    #[error(transparent)]
    Gpd(#[from] GpdError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// How a tile is turned into a factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightSystem {
    /// `A+x_i-y_j` on c/h/v, `B-x_i+y_j` on blanks, `A+B` on a/j/r.
    Equivariant,
    /// `x_i-y_j` on c/h/v, `x_i-y_j+1` on blanks, `1` on a/j/r.
    Modified,
    /// Laurent weights in multiplicative `x_i`, `y_j` and `t`.
    KTheory,
}

fn x(i: usize) -> Var {
    Var::X(i as u16)
}

fn y(j: usize) -> Var {
    Var::Y(j as u16)
}

fn z(i: usize) -> Var {
    Var::Z(i as u16)
}

fn ratio(num: Var, den: Var) -> Monomial {
    Monomial::from_factors([(num, 1), (den, -1)])
}

/// `t^[shift] (1 - num/den)`.
fn k_cross(num: Var, den: Var, shift: bool) -> Polynomial {
    let p = Polynomial::one() - Polynomial::term(ratio(num, den), 1);
    if shift {
        p.mul_monomial(&Monomial::var(Var::T), &BigInt::from(1))
    } else {
        p
    }
}

/// `(1 - t) (num/den)^[shift]`.
fn k_bump(num: Var, den: Var, shift: bool) -> Polynomial {
    let p = Polynomial::one() - Polynomial::var(Var::T);
    if shift {
        p.mul_monomial(&ratio(num, den), &BigInt::from(1))
    } else {
        p
    }
}

/// `1 - t num/den`.
fn k_blank(num: Var, den: Var) -> Polynomial {
    Polynomial::one() - Polynomial::term(ratio(num, den).mul(&Monomial::var(Var::T)), 1)
}

fn less(a: EdgeLabel, b: EdgeLabel) -> bool {
    matches!((a, b), (Some(a), Some(b)) if a < b)
}

/// The factor contributed by `tile` at square `(i, j)` whose West and South
/// inputs carry `west` and `south`.
pub fn tile_weight(ws: WeightSystem, tile: Tile, i: usize, j: usize, west: EdgeLabel, south: EdgeLabel) -> Polynomial {
    let crossing = matches!(tile, Tile::Cross | Tile::Horizontal | Tile::Vertical);
    match ws {
        WeightSystem::Equivariant => match tile {
            _ if crossing => Polynomial::linear(&[(Var::A, 1), (x(i), 1), (y(j), -1)], 0),
            Tile::Blank => Polynomial::linear(&[(Var::B, 1), (x(i), -1), (y(j), 1)], 0),
            _ => Polynomial::linear(&[(Var::A, 1), (Var::B, 1)], 0),
        },
        WeightSystem::Modified => match tile {
            _ if crossing => Polynomial::linear(&[(x(i), 1), (y(j), -1)], 0),
            Tile::Blank => Polynomial::linear(&[(x(i), 1), (y(j), -1)], 1),
            _ => Polynomial::one(),
        },
        WeightSystem::KTheory => match tile {
            _ if crossing => k_cross(y(j), x(i), tile == Tile::Vertical || less(south, west)),
            Tile::Blank => k_blank(y(j), x(i)),
            _ => k_bump(y(j), x(i), tile == Tile::ElbowJ || less(west, south)),
        },
    }
}

/// Product of the tile weights of `g`.
pub fn weight(g: &Gpd, ws: WeightSystem) -> Polynomial {
    let mut acc = Polynomial::one();
    let mut turns = 0u32;
    for ((i, j), t) in g.squares() {
        if ws == WeightSystem::Equivariant && t.is_turn() {
            turns += 1;
            continue;
        }
        if ws == WeightSystem::Modified && t.is_turn() {
            continue;
        }
        acc = &acc * &tile_weight(ws, t, i, j, g.west_in(i, j), g.south_in(i, j));
    }
    if turns > 0 {
        acc = &acc * &a_plus_b().pow(turns);
    }
    acc
}

fn a_plus_b() -> Polynomial {
    Polynomial::linear(&[(Var::A, 1), (Var::B, 1)], 0)
}

/// `Σ f(g)` over every filling of `spec`, with shards summed in parallel.
pub fn sum_over<F>(spec: &BoundarySpec, f: F) -> Result<Polynomial, ClassError>
where
    F: Fn(&Gpd) -> Polynomial + Sync,
{
    let shards = gpd::shards(spec)?;
    Ok(shards
        .into_par_iter()
        .map(|shard| shard.map(|g| f(&g)).sum::<Polynomial>())
        .collect::<Vec<_>>()
        .into_iter()
        .sum())
}

/// `Σ weight(g, ws)` over every filling of `spec`.
pub fn gpd_sum(spec: &BoundarySpec, ws: WeightSystem) -> Result<Polynomial, ClassError> {
    sum_over(spec, |g| weight(g, ws))
}

/// The polynomial `G_w`: equivariant weights summed over the fillings of
/// the standard square for `w`.
pub fn gpd_polynomial(w: &Permutation) -> Result<Polynomial, ClassError> {
    gpd_sum(&BoundarySpec::standard(w), WeightSystem::Equivariant)
}

/// `G_w / (A+B)^n`.
///
/// Every pipe turns from East to North on its own `a` or `j` square, so each
/// summand already carries at least `n` factors of `A+B`; the division is
/// done per filling.
pub fn class_ew(w: &Permutation) -> Result<Polynomial, ClassError> {
    let n = w.size() as u32;
    sum_over(&BoundarySpec::standard(w), |g| {
        let turns = g.count_tiles(Tile::is_turn) as u32;
        assert!(turns >= n, "a filling with fewer turns than pipes");
        let mut acc = a_plus_b().pow(turns - n);
        for ((i, j), t) in g.squares() {
            if !t.is_turn() {
                acc = &acc * &tile_weight(WeightSystem::Equivariant, t, i, j, None, None);
            }
        }
        acc
    })
}

/// Sum over subwords of `q` with product `w` of `Π_{p∈I} factor(p, r)`,
/// where `r` is the product of the letters chosen before `p`, and letters
/// not taken contribute `skip(p, r)`.
fn subword_sum<C, S>(q: &Word, w: &Permutation, rank: usize, take: C, skip: S) -> Polynomial
where
    C: Fn(usize, &Permutation) -> Polynomial,
    S: Fn(usize, &Permutation) -> Polynomial,
{
    let letters = q.letters();
    let mut states: BTreeMap<Permutation, Polynomial> = BTreeMap::new();
    states.insert(Permutation::identity(rank), Polynomial::one());
    for (p, &a) in letters.iter().enumerate() {
        let remaining = letters.len() - p - 1;
        let mut next: BTreeMap<Permutation, Polynomial> = BTreeMap::new();
        for (r, poly) in states {
            for (target, f) in [(r.mul_simple(a), take(p, &r)), (r.clone(), skip(p, &r))] {
                // The rest of the word can change the length by at most `remaining`.
                if (&target.inverse() * w).length() > remaining || f.is_zero() {
                    continue;
                }
                let entry = next.entry(target).or_insert_with(Polynomial::zero);
                *entry = &*entry + &(&poly * &f);
            }
        }
        states = next;
    }
    states.remove(w).unwrap_or_else(Polynomial::zero)
}

/// CSM class of an open Kazhdan–Lusztig variety: the sum over subwords
/// `I ⊆ q` with product `w` of `Π_{i∈I} β_i`, in `z_1..z_rank`.
pub fn csm_kl(q: &Word, w: &Permutation, rank: usize) -> Polynomial {
    let betas = q.beta_roots(rank);
    subword_sum(q, w, rank, |p, _| betas[p].clone(), |_, _| Polynomial::one())
}

/// `Π (1 + β_i)` over the letters of `q`.
pub fn tangent_chern(q: &Word, rank: usize) -> Polynomial {
    let factors: Vec<Polynomial> = q.beta_roots(rank).into_iter().map(|b| b + Polynomial::one()).collect();
    Polynomial::product(&factors)
}

/// The SSM restriction, `csm_kl / Π(1+β_i)`, left unreduced.
pub fn ssm_restriction(q: &Word, w: &Permutation, rank: usize) -> RationalFunction {
    RationalFunction::new(csm_kl(q, w, rank), tangent_chern(q, rank)).expect("Π(1+β) is nonzero")
}

/// The pullback from a partial flag variety: the SSM restriction summed over
/// the coset `w W_P`, `W_P` generated by the given simple reflections.
pub fn ssm_parabolic(q: &Word, w: &Permutation, rank: usize, generators: &BTreeSet<usize>) -> RationalFunction {
    let numerator = w
        .extend_to(rank)
        .coset_elements(generators)
        .iter()
        .map(|f| csm_kl(q, f, rank))
        .sum();
    RationalFunction::new(numerator, tangent_chern(q, rank)).expect("Π(1+β) is nonzero")
}

/// CSM class of `B_- w B_+` in `x_1..x_k`, `y_1..y_n`: modified weights
/// summed over the fillings of the rectangle for `w`.
pub fn csm_partial_perm(w: &PartialPermutation) -> Result<Polynomial, ClassError> {
    gpd_sum(&BoundarySpec::partial(w), WeightSystem::Modified)
}

/// [`csm_partial_perm`] computed instead as a sum of [`csm_kl`] over the
/// completions of `w` to a permutation of `S_{n+k}`.
///
/// The heap of `Word::rectangle(n, k)` is the `k × n` rectangle turned on
/// its side, so each completion enters through its inverse.
pub fn csm_partial_perm_via_completions(w: &PartialPermutation) -> Polynomial {
    let (k, n) = (w.rows(), w.cols());
    let q = Word::rectangle(n, k);
    let total: Polynomial = w.completions().iter().map(|c| csm_kl(&q, &c.inverse(), n + k)).sum();
    total.substitute(&rectangle_variables(k, n))
}

/// On that heap `z_i` pairs with row `i` and `z_{k+j}` with column `j`.
fn rectangle_variables(k: usize, n: usize) -> Substitution {
    let mut sigma = Substitution::new();
    for i in 1..=k {
        sigma.insert(z(i), Polynomial::var(x(i)));
    }
    for j in 1..=n {
        sigma.insert(z(k + j), Polynomial::var(y(j)));
    }
    sigma
}

/// CSM class of the double Bruhat cell for `(u, v)`, in `z_1..z_{2n}`.
///
/// Row `i` of the square carries `z_{n+i}` and column `j` carries `z_j`, so
/// a cross at `(i, j)` weighs `z_j - z_{n+i}`, the root of the matching
/// letter of the cut-the-deck word.
pub fn csm_double_bruhat(u: &Permutation, v: &Permutation) -> Result<Polynomial, ClassError> {
    let n = u.size();
    sum_over(&BoundarySpec::double_bruhat(u, v), |g| {
        let factors: Vec<Polynomial> = g
            .squares()
            .filter(|&(_, t)| t == Tile::Cross)
            .map(|((i, j), _)| Polynomial::linear(&[(z(j), 1), (z(n + i), -1)], 0))
            .collect();
        Polynomial::product(&factors)
    })
}

/// Outcome of comparing the two sides of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub left: Polynomial,
    pub right: Polynomial,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "left:  {}\nright: {}\ndiff:  {}", self.left, self.right, &self.left - &self.right)
    }
}

/// Checks `csm_partial_perm(w) = (-1)^{n²-ℓ(w)} G_w|_{A=0,B=-1}` for a full
/// permutation `w`.
pub fn csm_full_perm_check(w: &Permutation) -> Result<Result<(), Mismatch>, ClassError> {
    let n = w.size();
    let left = csm_partial_perm(&w.to_partial())?;
    let sigma = Substitution::from([(Var::A, Polynomial::zero()), (Var::B, Polynomial::constant(-1))]);
    let mut right = gpd_polynomial(w)?.substitute(&sigma);
    if (n * n - w.length()) % 2 == 1 {
        right = -right;
    }
    Ok(if left == right { Ok(()) } else { Err(Mismatch { left, right }) })
}

/// Motivic Chern class of an open Kazhdan–Lusztig variety, a Laurent
/// polynomial in `z_1..z_rank` and `t`. Each letter `a` of `q` contributes a
/// crossing or bump weight in `x = z_{u(a)}`, `y = z_{u(a+1)}`, and the
/// exponents compare the labels `r(a)`, `r(a+1)` of the two pipes meeting
/// there (`r` the product of the letters already taken).
pub fn motivic_kl(q: &Word, w: &Permutation, rank: usize) -> Polynomial {
    let sides = q.beta_pairs(rank);
    let letters = q.letters();
    subword_sum(
        q,
        w,
        rank,
        |p, r| {
            let a = letters[p];
            let (xs, ys) = sides[p];
            k_cross(z(ys), z(xs), r.apply(a) > r.apply(a + 1))
        },
        |p, r| {
            let a = letters[p];
            let (xs, ys) = sides[p];
            k_bump(z(ys), z(xs), r.apply(a) < r.apply(a + 1))
        },
    )
}
