//! Permutations, partial permutations and words in simple transpositions.
//!
//! Products compose as functions: `(u * v)(i) = u(v(i))`. A word
//! `[q1, ..., qm]` stands for `s_q1 * s_q2 * ... * s_qm`, so right
//! multiplication by `s_a` swaps the entries in positions `a` and `a + 1`
//! of the one-line notation.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{Polynomial, Var};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationError {
    #[error("`{0}` is not a permutation in one-line notation")]
    NotAPermutation(String),
    #[error("`{0}` is not a comma-separated word of positive letters")]
    BadWord(String),
    #[error("letter {letter} is out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("`{0}` is not a 0/1 matrix with at most one 1 per row and column")]
    NotAPartialPermutation(String),
    #[error("permutations of different sizes: {0} and {1}")]
    SizeMismatch(usize, usize),
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    /// The longest element `n n-1 ... 2 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { one_line: (1..=n).rev().collect() }
    }

    /// The simple transposition `s_a` in `S_n`.
    pub fn simple(a: usize, n: usize) -> Self {
        assert!(a >= 1 && a < n, "s_{a} is not a simple transposition of S_{n}");
        Permutation::identity(n).mul_simple(a)
    }

    pub fn from_one_line(values: Vec<usize>) -> Result<Self, ValidationError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(ValidationError::NotAPermutation(format!("{values:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line: values })
    }

    pub fn size(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self * s_a`.
    pub fn mul_simple(&self, a: usize) -> Permutation {
        let mut out = self.clone();
        out.one_line.swap(a - 1, a);
        out
    }

    /// `s_a * self`.
    pub fn simple_mul(&self, a: usize) -> Permutation {
        let mut out = self.clone();
        for v in &mut out.one_line {
            if *v == a {
                *v = a + 1;
            } else if *v == a + 1 {
                *v = a;
            }
        }
        out
    }

    /// Right descent: `length(self * s_a) < length(self)`.
    pub fn has_descent(&self, a: usize) -> bool {
        self.one_line[a - 1] > self.one_line[a]
    }

    /// `u ⊕ v`, one-line `u(1)..u(n) n+v(1)..n+v(m)`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let n = self.size();
        let mut one_line = self.one_line.clone();
        one_line.extend(other.one_line.iter().map(|&v| n + v));
        Permutation { one_line }
    }

    /// `w0 * self * w0`.
    pub fn conjugate_by_longest(&self) -> Permutation {
        let n = self.size();
        Permutation {
            one_line: (1..=n).map(|i| n + 1 - self.apply(n + 1 - i)).collect(),
        }
    }

    /// Embeds into `S_m` (`m >= n`) fixing the extra points.
    pub fn extend_to(&self, m: usize) -> Permutation {
        let mut one_line = self.one_line.clone();
        one_line.extend(self.size() + 1..=m);
        Permutation { one_line }
    }

    /// A reduced word, found by repeatedly stripping the leftmost right descent.
    pub fn reduced_word(&self) -> Word {
        let mut w = self.clone();
        let mut letters = Vec::with_capacity(self.length());
        while let Some(a) = (1..w.size()).find(|&a| w.has_descent(a)) {
            w = w.mul_simple(a);
            letters.push(a);
        }
        letters.reverse();
        Word::new(letters)
    }

    /// Every permutation of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if current.len() == n {
                out.push(Permutation { one_line: current.clone() });
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    current.push(v);
                    rec(n, current, used, out);
                    current.pop();
                    used[v] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }

    /// The coset `{ self * f : f ∈ W_P }` with `W_P = <s_i : i ∈ generators>`.
    pub fn coset_elements(&self, generators: &BTreeSet<usize>) -> BTreeSet<Permutation> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([self.clone()]);
        seen.insert(self.clone());
        while let Some(w) = queue.pop_front() {
            for &a in generators {
                let next = w.mul_simple(a);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        seen
    }

    /// The permutation matrix with a 1 in position `(i, w(i))`.
    pub fn to_partial(&self) -> PartialPermutation {
        let n = self.size();
        PartialPermutation {
            rows: n,
            cols: n,
            row_to_col: self.one_line.iter().map(|&v| Some(v)).collect(),
        }
    }
}

impl Mul<&Permutation> for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.size(), rhs.size(), "permutations of different sizes");
        Permutation {
            one_line: rhs.one_line.iter().map(|&i| self.apply(i)).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.size() > 9 { "," } else { "" };
        let parts: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

/// Parses `2431`, or `10,2,...` when some value has two digits.
impl FromStr for Permutation {
    type Err = ValidationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ValidationError::NotAPermutation(s.to_string());
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            if s.is_empty() {
                return Err(bad());
            }
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        Permutation::from_one_line(values).map_err(|_| bad())
    }
}

/// A word in the simple transpositions `s_1, s_2, ...`; need not be reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Smallest rank `N` whose simple transpositions contain every letter.
    pub fn min_rank(&self) -> usize {
        self.letters.iter().max().map_or(1, |&m| m + 1)
    }

    pub fn check_rank(&self, rank: usize) -> Result<(), ValidationError> {
        match self.letters.iter().find(|&&a| a == 0 || a >= rank) {
            Some(&letter) => Err(ValidationError::LetterOutOfRange { letter, rank }),
            None => Ok(()),
        }
    }

    /// `s_q1 * ... * s_qm` in `S_rank`.
    pub fn product(&self, rank: usize) -> Permutation {
        self.letters
            .iter()
            .fold(Permutation::identity(rank), |w, &a| w.mul_simple(a))
    }

    pub fn is_reduced(&self, rank: usize) -> bool {
        self.product(rank).length() == self.len()
    }

    /// The roots `β_i = (s_q1 ... s_q(i-1)) · α_qi` with `α_a = z_a - z_(a+1)`,
    /// returned as index pairs `(p, q)` meaning `z_p - z_q`.
    pub fn beta_pairs(&self, rank: usize) -> Vec<(usize, usize)> {
        let mut prefix = Permutation::identity(rank);
        let mut out = Vec::with_capacity(self.len());
        for &a in &self.letters {
            out.push((prefix.apply(a), prefix.apply(a + 1)));
            prefix = prefix.mul_simple(a);
        }
        out
    }

    /// The β-roots as linear polynomials in `z_1..z_rank`.
    pub fn beta_roots(&self, rank: usize) -> Vec<Polynomial> {
        self.beta_pairs(rank)
            .into_iter()
            .map(|(p, q)| Polynomial::linear(&[(Var::Z(p as u16), 1), (Var::Z(q as u16), -1)], 0))
            .collect()
    }

    /// Reduced word of length `n²` for the cut-the-deck permutation
    /// `n+1 ... 2n 1 ... n`: the runs `(n+i-1, n+i-2, ..., i)` for `i = 1..n`.
    pub fn cut_deck(n: usize) -> Word {
        Word::rectangle(n, n)
    }

    /// Reduced word for `n+1 ... n+k 1 ... n` in `S_(n+k)`, one run
    /// `(n+i-1, ..., i)` per `i = 1..k`; for `k = n` this is [`Word::cut_deck`].
    pub fn rectangle(k: usize, n: usize) -> Word {
        let mut letters = Vec::with_capacity(k * n);
        for i in 1..=k {
            letters.extend((i..n + i).rev());
        }
        Word { letters }
    }

    /// Every reduced word of `w`, in lexicographic order.
    pub fn all_reduced(w: &Permutation) -> Vec<Word> {
        fn rec(w: &Permutation, suffix: &mut Vec<usize>, out: &mut Vec<Word>) {
            if w.is_identity() {
                let mut letters = suffix.clone();
                letters.reverse();
                out.push(Word { letters });
                return;
            }
            for a in 1..w.size() {
                if w.has_descent(a) {
                    suffix.push(a);
                    rec(&w.mul_simple(a), suffix, out);
                    suffix.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(w, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.letters.cmp(&b.letters));
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses a comma list `3,4,2,1,2,3`; the empty string is the empty word.
impl FromStr for Word {
    type Err = ValidationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::default());
        }
        let letters = s
            .split(',')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(a) if a > 0 => Ok(a),
                _ => Err(ValidationError::BadWord(s.to_string())),
            })
            .collect::<Result<_, _>>()?;
        Ok(Word { letters })
    }
}

/// A `k × n` 0/1 matrix with at most one 1 in each row and column.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialPermutation {
    rows: usize,
    cols: usize,
    row_to_col: Vec<Option<usize>>,
}

impl PartialPermutation {
    pub fn new(rows: usize, cols: usize, row_to_col: Vec<Option<usize>>) -> Result<Self, ValidationError> {
        let bad = || ValidationError::NotAPartialPermutation(format!("{row_to_col:?}"));
        if row_to_col.len() != rows {
            return Err(bad());
        }
        let mut used = vec![false; cols + 1];
        for &c in row_to_col.iter().flatten() {
            if c == 0 || c > cols || used[c] {
                return Err(bad());
            }
            used[c] = true;
        }
        Ok(PartialPermutation { rows, cols, row_to_col })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Column of the 1 in (1-based) row `i`, if any.
    pub fn col_of_row(&self, i: usize) -> Option<usize> {
        self.row_to_col[i - 1]
    }

    pub fn row_of_col(&self, j: usize) -> Option<usize> {
        self.row_to_col.iter().position(|&c| c == Some(j)).map(|i| i + 1)
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.row_to_col[i - 1] == Some(j)
    }

    pub fn rank(&self) -> usize {
        self.row_to_col.iter().flatten().count()
    }

    /// All permutations `w'` of `S_(n+k)` whose permutation matrix (1 at
    /// `(i, w'(i))`) has `self` as its north-west `k × n` corner.
    pub fn completions(&self) -> Vec<Permutation> {
        let (k, n) = (self.rows, self.cols);
        Permutation::all(n + k)
            .into_iter()
            .filter(|w| {
                (1..=k).all(|i| {
                    let c = w.apply(i);
                    let corner = (c <= n).then_some(c);
                    corner == self.row_to_col[i - 1]
                })
            })
            .collect()
    }

    /// All `k × n` partial permutations, in a fixed order.
    pub fn all(rows: usize, cols: usize) -> Vec<PartialPermutation> {
        let mut out = Vec::new();
        fn rec(
            i: usize,
            rows: usize,
            cols: usize,
            used: &mut [bool],
            current: &mut Vec<Option<usize>>,
            out: &mut Vec<PartialPermutation>,
        ) {
            if i == rows {
                out.push(PartialPermutation { rows, cols, row_to_col: current.clone() });
                return;
            }
            current.push(None);
            rec(i + 1, rows, cols, used, current, out);
            current.pop();
            for c in 1..=cols {
                if !used[c] {
                    used[c] = true;
                    current.push(Some(c));
                    rec(i + 1, rows, cols, used, current, out);
                    current.pop();
                    used[c] = false;
                }
            }
        }
        rec(0, rows, cols, &mut vec![false; cols + 1], &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for PartialPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .row_to_col
            .iter()
            .map(|c| (1..=self.cols).map(|j| if *c == Some(j) { '1' } else { '0' }).collect())
            .collect();
        f.write_str(&rows.join("/"))
    }
}

/// Parses row strings separated by `/`, e.g. `10/00`.
impl FromStr for PartialPermutation {
    type Err = ValidationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ValidationError::NotAPartialPermutation(s.to_string());
        let rows: Vec<&str> = s.trim().split('/').collect();
        let cols = rows.first().map_or(0, |r| r.len());
        if cols == 0 {
            return Err(bad());
        }
        let mut row_to_col = Vec::with_capacity(rows.len());
        for r in &rows {
            if r.len() != cols || !r.bytes().all(|b| b == b'0' || b == b'1') {
                return Err(bad());
            }
            let ones: Vec<usize> = r.bytes().enumerate().filter(|(_, b)| *b == b'1').map(|(j, _)| j + 1).collect();
            match ones.as_slice() {
                [] => row_to_col.push(None),
                [j] => row_to_col.push(Some(*j)),
                _ => return Err(bad()),
            }
        }
        PartialPermutation::new(rows.len(), cols, row_to_col).map_err(|_| bad())
    }
}
