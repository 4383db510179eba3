//! Symmetric words over a shifted basis and the coalgebra structure of `S(V)`.
//!
//! A [`SymWord`] is a sorted multiset of generator indices. Generators are ordered
//! by `(degree, index)`; a word repeating an odd generator is zero and never stored.
//! All signs are produced at canonicalization time and returned separately.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::Zero;
use smallvec::SmallVec;
use thiserror::Error;

use crate::graded::{int, sign_pow, GradedSpace, Scalar, SparseVec};

/// Errors raised by word combinatorics.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SymError {
    #[error("generator {index} is not in a space of dimension {dim}")]
    UnknownGenerator { index: usize, dim: usize },
    #[error("generator `{name}` has degree {degree}; words need strictly negative degrees")]
    NonNegativeGenerator { name: String, degree: i32 },
    #[error("bracket data is not graded skew-symmetric at inputs {tuple:?}")]
    NonSkew { tuple: Vec<usize> },
    #[error("map on word {word:?} has output of degree {found}, expected {expected}")]
    WrongDegree { word: Vec<usize>, expected: i32, found: i32 },
}

/// Canonical symmetric word: generator indices sorted by `(degree, index)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SymWord(SmallVec<[u32; 8]>);

impl fmt::Debug for SymWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl SymWord {
    /// The unit `1` of weight zero.
    pub fn unit() -> Self {
        SymWord(SmallVec::new())
    }

    pub fn generator(i: usize) -> Self {
        SymWord(SmallVec::from_slice(&[i as u32]))
    }

    pub fn weight(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    pub fn letter(&self, k: usize) -> usize {
        self.0[k] as usize
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.letters().collect()
    }

    pub(crate) fn from_letters(letters: impl IntoIterator<Item = usize>) -> Self {
        SymWord(letters.into_iter().map(|i| i as u32).collect())
    }
}

/// Formal combination of words.
pub type WordVec = BTreeMap<SymWord, Scalar>;

/// A linear map out of `S(V)`, stored on canonical words.
pub type WordMap = BTreeMap<SymWord, SparseVec>;

/// Formal combination of pairs of words (target of the coproduct).
pub type WordTensorSum = BTreeMap<(SymWord, SymWord), Scalar>;

/// Skew bracket table: ordered input tuple → output vector.
pub type BracketTable = BTreeMap<Vec<usize>, SparseVec>;

pub fn add_word(target: &mut WordVec, w: SymWord, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match target.entry(w) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c.clone());
        }
    }
}

/// Adds `c · v` at word `w` of a word map, pruning zeros.
pub fn add_to_word_map(target: &mut WordMap, w: &SymWord, v: &SparseVec, c: &Scalar) {
    if c.is_zero() || v.is_zero() {
        return;
    }
    let slot = target.entry(w.clone()).or_default();
    slot.add_scaled(v, c);
    if slot.is_zero() {
        target.remove(w);
    }
}

/// One term `coeff · left ⊗ right` of a coproduct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoproductTerm {
    pub coeff: i64,
    pub left: SymWord,
    pub right: SymWord,
}

/// Symmetric words over a graded space of strictly negative degrees.
pub struct WordSpace {
    base: GradedSpace,
    rank: Vec<u32>,
    order: Vec<usize>,
    by_degree: RwLock<HashMap<i32, Arc<Vec<SymWord>>>>,
    coproducts: RwLock<HashMap<SymWord, Arc<Vec<CoproductTerm>>>>,
}

impl fmt::Debug for WordSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WordSpace").field("base", &self.base).finish()
    }
}

impl Clone for WordSpace {
    fn clone(&self) -> Self {
        WordSpace::new(self.base.clone()).expect("already validated")
    }
}

impl PartialEq for WordSpace {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
    }
}

impl Eq for WordSpace {}

impl WordSpace {
    pub fn new(base: GradedSpace) -> Result<Self, SymError> {
        for i in 0..base.dim() {
            if base.degree(i) >= 0 {
                return Err(SymError::NonNegativeGenerator {
                    name: base.name(i).to_string(),
                    degree: base.degree(i),
                });
            }
        }
        let mut order: Vec<usize> = (0..base.dim()).collect();
        order.sort_by_key(|&i| (base.degree(i), i));
        let mut rank = vec![0u32; base.dim()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r as u32;
        }
        Ok(WordSpace {
            base,
            rank,
            order,
            by_degree: RwLock::new(HashMap::new()),
            coproducts: RwLock::new(HashMap::new()),
        })
    }

    pub fn base(&self) -> &GradedSpace {
        &self.base
    }

    pub fn generator_degree(&self, i: usize) -> i32 {
        self.base.degree(i)
    }

    fn odd(&self, i: usize) -> bool {
        self.base.degree(i) % 2 != 0
    }

    pub fn degree(&self, w: &SymWord) -> i32 {
        w.letters().map(|i| self.base.degree(i)).sum()
    }

    /// `a∨b∨c` using basis names; `1` for the unit.
    pub fn display(&self, w: &SymWord) -> String {
        if w.is_unit() {
            return "1".to_string();
        }
        w.letters().map(|i| self.base.name(i)).collect::<Vec<_>>().join("∨")
    }

    /// Sorts a raw list of generators; `None` if it repeats an odd generator.
    pub fn canonicalize(&self, raw: &[usize]) -> Result<Option<(i32, SymWord)>, SymError> {
        if let Some(&index) = raw.iter().find(|&&i| i >= self.base.dim()) {
            return Err(SymError::UnknownGenerator { index, dim: self.base.dim() });
        }
        Ok(self.canonicalize_unchecked(raw))
    }

    fn canonicalize_unchecked(&self, raw: &[usize]) -> Option<(i32, SymWord)> {
        let mut letters: SmallVec<[u32; 8]> = raw.iter().map(|&i| i as u32).collect();
        let mut sign = 1;
        for a in 1..letters.len() {
            let mut b = a;
            while b > 0 && self.rank[letters[b - 1] as usize] > self.rank[letters[b] as usize] {
                if self.odd(letters[b] as usize) && self.odd(letters[b - 1] as usize) {
                    sign = -sign;
                }
                letters.swap(b - 1, b);
                b -= 1;
            }
        }
        for pair in letters.windows(2) {
            if pair[0] == pair[1] && self.odd(pair[0] as usize) {
                return None;
            }
        }
        Some((sign, SymWord(letters)))
    }

    /// `μ_S(a ⊗ b)`.
    pub fn product(&self, a: &SymWord, b: &SymWord) -> Option<(i32, SymWord)> {
        let raw: SmallVec<[usize; 16]> = a.letters().chain(b.letters()).collect();
        self.canonicalize_unchecked(&raw)
    }

    /// `x ∨ w` for a vector `x` of the base space.
    pub fn vector_times_word(&self, x: &SparseVec, w: &SymWord) -> WordVec {
        let mut out = WordVec::new();
        let mut raw: SmallVec<[usize; 16]> = SmallVec::new();
        for (i, c) in x.iter() {
            raw.clear();
            raw.push(i);
            raw.extend(w.letters());
            if let Some((s, word)) = self.canonicalize_unchecked(&raw) {
                add_word(&mut out, word, &(c * int(s.into())));
            }
        }
        out
    }

    /// Symmetric product `x_1 ∨ … ∨ x_m` of base vectors.
    pub fn vector_product(&self, xs: &[&SparseVec]) -> WordVec {
        let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), int(1))];
        for x in xs {
            let mut next = Vec::with_capacity(partial.len() * x.len());
            for (letters, c) in &partial {
                for (i, a) in x.iter() {
                    let mut l = letters.clone();
                    l.push(i);
                    next.push((l, c * a));
                }
            }
            partial = next;
        }
        let mut out = WordVec::new();
        for (letters, c) in partial {
            if let Some((s, w)) = self.canonicalize_unchecked(&letters) {
                add_word(&mut out, w, &(c * int(s.into())));
            }
        }
        out
    }

    /// Full coproduct `Δ_S(w)`, including the unit terms; aggregated and sorted.
    pub fn coproduct(&self, w: &SymWord) -> Arc<Vec<CoproductTerm>> {
        if let Some(hit) = self.coproducts.read().expect("cache lock").get(w) {
            return Arc::clone(hit);
        }
        let n = w.weight();
        let mut acc: BTreeMap<(SymWord, SymWord), i64> = BTreeMap::new();
        for mask in 0u32..(1u32 << n) {
            let mut sign = 1i64;
            let mut odd_right = 0u32;
            for k in 0..n {
                let odd = self.odd(w.letter(k));
                if mask & (1 << k) != 0 {
                    if odd && odd_right % 2 == 1 {
                        sign = -sign;
                    }
                } else if odd {
                    odd_right += 1;
                }
            }
            let left = SymWord::from_letters((0..n).filter(|k| mask & (1 << k) != 0).map(|k| w.letter(k)));
            let right = SymWord::from_letters((0..n).filter(|k| mask & (1 << k) == 0).map(|k| w.letter(k)));
            *acc.entry((left, right)).or_insert(0) += sign;
        }
        let terms: Vec<CoproductTerm> = acc
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|((left, right), coeff)| CoproductTerm { coeff, left, right })
            .collect();
        let terms = Arc::new(terms);
        self.coproducts
            .write()
            .expect("cache lock")
            .insert(w.clone(), Arc::clone(&terms));
        terms
    }

    /// `Δ_S(w)` as a formal sum.
    pub fn coproduct_sum(&self, w: &SymWord) -> WordTensorSum {
        self.coproduct(w)
            .iter()
            .map(|t| ((t.left.clone(), t.right.clone()), int(t.coeff)))
            .collect()
    }

    /// `Δ̄(w)`: the coproduct without the two unit terms.
    pub fn reduced_coproduct(&self, w: &SymWord) -> WordTensorSum {
        self.coproduct(w)
            .iter()
            .filter(|t| !t.left.is_unit() && !t.right.is_unit())
            .map(|t| ((t.left.clone(), t.right.clone()), int(t.coeff)))
            .collect()
    }

    /// All nonzero words of exact degree `d` (`d ≤ 0`), sorted by weight then letters.
    pub fn words_of_degree(&self, d: i32) -> Arc<Vec<SymWord>> {
        if let Some(hit) = self.by_degree.read().expect("cache lock").get(&d) {
            return Arc::clone(hit);
        }
        let mut out = Vec::new();
        if d <= 0 {
            let mut current = Vec::new();
            self.enumerate(0, d, &mut current, &mut out);
        }
        out.sort_by_key(|a| (a.weight(), self.rank_key(a)));
        let out = Arc::new(out);
        self.by_degree.write().expect("cache lock").insert(d, Arc::clone(&out));
        out
    }

    fn rank_key(&self, w: &SymWord) -> SmallVec<[u32; 8]> {
        w.letters().map(|i| self.rank[i]).collect()
    }

    fn enumerate(&self, pos: usize, remaining: i32, current: &mut Vec<usize>, out: &mut Vec<SymWord>) {
        if remaining == 0 {
            out.push(SymWord::from_letters(current.iter().copied()));
            return;
        }
        if pos == self.order.len() {
            return;
        }
        let g = self.order[pos];
        let dg = self.base.degree(g);
        self.enumerate(pos + 1, remaining, current, out);
        let max_mult = if self.odd(g) { 1 } else { i32::MAX };
        let mut mult = 0;
        let mut rem = remaining;
        while mult < max_mult && rem - dg <= 0 {
            rem -= dg;
            mult += 1;
            current.push(g);
            self.enumerate(pos + 1, rem, current, out);
        }
        for _ in 0..mult {
            current.pop();
        }
    }

    /// Words with degree in `[lo, hi]`, listed degree by degree from `hi` down.
    pub fn words_in_degree_range(&self, lo: i32, hi: i32) -> Vec<SymWord> {
        let mut out = Vec::new();
        let mut d = hi.min(0);
        while d >= lo {
            out.extend(self.words_of_degree(d).iter().cloned());
            d -= 1;
        }
        out
    }

    /// Every nonzero word of weight at most `max_weight`.
    pub fn words_up_to_weight(&self, max_weight: usize) -> Vec<SymWord> {
        let min_gen = self.base.min_degree().unwrap_or(-1);
        let lo = min_gen.saturating_mul(max_weight as i32);
        self.words_in_degree_range(lo, 0)
            .into_iter()
            .filter(|w| w.weight() <= max_weight)
            .collect()
    }

    /// Evaluates a word map on a combination of words.
    pub fn evaluate(&self, map: &WordMap, v: &WordVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (w, c) in v {
            if let Some(x) = map.get(w) {
                out.add_scaled(x, c);
            }
        }
        out
    }
}

/// All `(k, l)`-unshuffles in one-line notation: increasing on the first `k` and
/// on the last `l` slots. Listed with the first block in lexicographic order.
pub fn unshuffles(k: usize, l: usize) -> Vec<Vec<usize>> {
    let n = k + l;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == k {
            let mut perm = chosen.clone();
            perm.extend((0..n).filter(|i| !chosen.contains(i)));
            out.push(perm);
            return;
        }
        for i in start..n {
            chosen.push(i);
            rec(i + 1, n, k, chosen, out);
            chosen.pop();
        }
    }
    rec(0, n, k, &mut chosen, &mut out);
    out
}

/// Coderivation `d_λ = μ_S ∘ (λ ⊗ id) ∘ Δ_S` induced by a degree-1 family `λ`.
pub struct Coderivation<'a> {
    words: &'a WordSpace,
    lambda: &'a WordMap,
}

/// Wraps `λ` as a coderivation after checking every component has degree 1.
pub fn coderivation_from<'a>(words: &'a WordSpace, lambda: &'a WordMap) -> Result<Coderivation<'a>, SymError> {
    check_map_degree(words, words.base(), lambda, 1)?;
    Ok(Coderivation { words, lambda })
}

/// Checks that `map(w)` is homogeneous of degree `|w| + degree` for every stored word.
pub fn check_map_degree(words: &WordSpace, target: &GradedSpace, map: &WordMap, degree: i32) -> Result<(), SymError> {
    for (w, v) in map {
        let expected = words.degree(w) + degree;
        for (i, _) in v.iter() {
            if target.degree(i) != expected {
                return Err(SymError::WrongDegree { word: w.to_vec(), expected, found: target.degree(i) });
            }
        }
    }
    Ok(())
}

impl<'a> Coderivation<'a> {
    pub fn new_unchecked(words: &'a WordSpace, lambda: &'a WordMap) -> Self {
        Coderivation { words, lambda }
    }

    pub fn apply(&self, w: &SymWord) -> WordVec {
        let mut out = WordVec::new();
        for term in self.words.coproduct(w).iter() {
            if term.left.is_unit() {
                continue;
            }
            if let Some(x) = self.lambda.get(&term.left) {
                for (u, c) in self.words.vector_times_word(x, &term.right) {
                    add_word(&mut out, u, &(c * int(term.coeff)));
                }
            }
        }
        out
    }

    pub fn apply_vec(&self, v: &WordVec) -> WordVec {
        let mut out = WordVec::new();
        for (w, c) in v {
            for (u, a) in self.apply(w) {
                add_word(&mut out, u, &(a * c));
            }
        }
        out
    }
}

/// Coalgebra morphism `S(V) → S(W)` determined by its degree-0 corestriction `F¹`.
pub struct CoalgebraMorphism<'a> {
    source: &'a WordSpace,
    target: &'a WordSpace,
    components: &'a WordMap,
    max_block: usize,
}

/// Wraps components `F¹_n` after checking they have degree 0.
pub fn coalgebra_morphism_from<'a>(
    source: &'a WordSpace,
    target: &'a WordSpace,
    components: &'a WordMap,
) -> Result<CoalgebraMorphism<'a>, SymError> {
    for (w, v) in components {
        let expected = source.degree(w);
        for (i, _) in v.iter() {
            if target.generator_degree(i) != expected {
                return Err(SymError::WrongDegree { word: w.to_vec(), expected, found: target.generator_degree(i) });
            }
        }
    }
    Ok(CoalgebraMorphism::new_unchecked(source, target, components))
}

impl<'a> CoalgebraMorphism<'a> {
    pub fn new_unchecked(source: &'a WordSpace, target: &'a WordSpace, components: &'a WordMap) -> Self {
        let max_block = components.keys().map(SymWord::weight).max().unwrap_or(0);
        CoalgebraMorphism { source, target, components, max_block }
    }

    /// Sum over unordered set partitions of the letters, `F¹` applied blockwise.
    pub fn apply(&self, w: &SymWord) -> WordVec {
        let n = w.weight();
        let mut out = WordVec::new();
        if n == 0 {
            out.insert(SymWord::unit(), int(1));
            return out;
        }
        let degrees: Vec<i32> = w.letters().map(|i| self.source.generator_degree(i)).collect();
        let mut assignment = vec![0usize; n];
        self.partitions(w, &degrees, 0, 0, &mut assignment, &mut out);
        out
    }

    fn partitions(
        &self,
        w: &SymWord,
        degrees: &[i32],
        pos: usize,
        blocks: usize,
        assignment: &mut Vec<usize>,
        out: &mut WordVec,
    ) {
        let n = w.weight();
        if pos == n {
            self.emit(w, degrees, blocks, assignment, out);
            return;
        }
        for b in 0..=blocks {
            assignment[pos] = b;
            let size = assignment[..=pos].iter().filter(|&&x| x == b).count();
            if size > self.max_block {
                continue;
            }
            let next_blocks = if b == blocks { blocks + 1 } else { blocks };
            self.partitions(w, degrees, pos + 1, next_blocks, assignment, out);
        }
    }

    fn emit(&self, w: &SymWord, degrees: &[i32], blocks: usize, assignment: &[usize], out: &mut WordVec) {
        let mut perm = Vec::with_capacity(w.weight());
        let mut images = Vec::with_capacity(blocks);
        for b in 0..blocks {
            let positions: Vec<usize> = (0..w.weight()).filter(|&k| assignment[k] == b).collect();
            let block = SymWord::from_letters(positions.iter().map(|&k| w.letter(k)));
            match self.components.get(&block) {
                Some(v) => images.push(v),
                None => return,
            }
            perm.extend(positions);
        }
        let sign = crate::graded::koszul_sign(&perm, degrees).expect("valid permutation");
        for (u, c) in self.target.vector_product(&images) {
            add_word(out, u, &(c * int(sign.into())));
        }
    }

    pub fn apply_vec(&self, v: &WordVec) -> WordVec {
        let mut out = WordVec::new();
        for (w, c) in v {
            for (u, a) in self.apply(w) {
                add_word(&mut out, u, &(a * c));
            }
        }
        out
    }
}

/// `(-1)^{Σ_i (k-i)|x_i|}` for unshifted degrees `|x_1|, …, |x_k|`.
pub fn decalage_sign(degrees: &[i32]) -> i32 {
    let k = degrees.len() as i64;
    let e: i64 = degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| (k - 1 - i as i64) * i64::from(d))
        .sum();
    sign_pow(e)
}

/// Skew brackets on `g` to symmetric degree-1 brackets on `g[1]`:
/// `λ_k(sx_1 ∨ … ∨ sx_k) = (-1)^{Σ(k-i)|x_i|} s[x_1, …, x_k]`.
pub fn decalage(space: &GradedSpace, words: &WordSpace, brackets: &BracketTable) -> Result<WordMap, SymError> {
    let mut lambda = WordMap::new();
    let mut seen: BTreeMap<SymWord, (Vec<usize>, SparseVec)> = BTreeMap::new();
    for (tuple, value) in brackets {
        let degrees: Vec<i32> = tuple.iter().map(|&i| space.degree(i)).collect();
        let expected = degrees.iter().sum::<i32>() + 2 - tuple.len() as i32;
        if let Some(found) = value.iter().map(|(i, _)| space.degree(i)).find(|&d| d != expected) {
            return Err(SymError::WrongDegree { word: tuple.clone(), expected, found });
        }
        let Some((eps, w)) = words.canonicalize(tuple)? else {
            if value.is_zero() {
                continue;
            }
            return Err(SymError::NonSkew { tuple: tuple.clone() });
        };
        let s = eps * decalage_sign(&degrees);
        let lam = value.scaled(&int(s.into()));
        if let Some((_, previous)) = seen.get(&w) {
            if previous != &lam {
                return Err(SymError::NonSkew { tuple: tuple.clone() });
            }
            continue;
        }
        seen.insert(w.clone(), (tuple.clone(), lam.clone()));
        if !lam.is_zero() {
            lambda.insert(w, lam);
        }
    }
    Ok(lambda)
}

/// Inverse of [`decalage`]; tuples are listed in canonical word order.
pub fn inverse_decalage(space: &GradedSpace, lambda: &WordMap) -> BracketTable {
    lambda
        .iter()
        .map(|(w, v)| {
            let degrees: Vec<i32> = w.letters().map(|i| space.degree(i)).collect();
            (w.to_vec(), v.scaled(&int(decalage_sign(&degrees).into())))
        })
        .collect()
}

/// Evaluates the skew bracket `[x_1, …, x_k]` on an arbitrary ordered tuple.
pub fn skew_bracket(space: &GradedSpace, words: &WordSpace, lambda: &WordMap, tuple: &[usize]) -> SparseVec {
    let degrees: Vec<i32> = tuple.iter().map(|&i| space.degree(i)).collect();
    match words.canonicalize(tuple).expect("indices in range") {
        None => SparseVec::new(),
        Some((eps, w)) => lambda
            .get(&w)
            .map(|v| v.scaled(&int((eps * decalage_sign(&degrees)).into())))
            .unwrap_or_default(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(degrees: &[i32]) -> WordSpace {
        WordSpace::new(GradedSpace::new(degrees.iter().enumerate().map(|(i, &d)| (format!("x{i}"), d))).unwrap()).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        let ws = space(&[-1, -1, -2]);
        assert_eq!(ws.canonicalize(&[1, 0]).unwrap(), Some((-1, SymWord::from_letters([0, 1]))));
        assert_eq!(ws.canonicalize(&[0, 0]).unwrap(), None);
        assert_eq!(ws.canonicalize(&[2, 2]).unwrap(), Some((1, SymWord::from_letters([2, 2]))));
        assert!(ws.canonicalize(&[3]).is_err());
    }

    #[test]
    fn unshuffle_counts() {
        assert_eq!(unshuffles(1, 2).len(), 3);
        assert_eq!(unshuffles(0, 4), vec![vec![0, 1, 2, 3]]);
        assert_eq!(unshuffles(2, 2).len(), 6);
    }

    #[test]
    fn coproduct_of_unit() {
        let ws = space(&[-1]);
        let d = ws.coproduct(&SymWord::unit());
        assert_eq!(*d, vec![CoproductTerm { coeff: 1, left: SymWord::unit(), right: SymWord::unit() }]);
    }

    #[test]
    fn coproduct_of_two_odd_letters() {
        let ws = space(&[-1, -1]);
        let xy = SymWord::from_letters([0, 1]);
        let x = SymWord::generator(0);
        let y = SymWord::generator(1);
        let d = ws.coproduct_sum(&xy);
        let expected: WordTensorSum = [
            ((SymWord::unit(), xy.clone()), int(1)),
            ((x.clone(), y.clone()), int(1)),
            ((y, x), int(-1)),
            ((xy, SymWord::unit()), int(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(d, expected);
    }

    #[test]
    fn coproduct_counts_repeated_even_letters() {
        let ws = space(&[-2]);
        let xx = SymWord::from_letters([0, 0]);
        let d = ws.coproduct_sum(&xx);
        assert_eq!(d.get(&(SymWord::generator(0), SymWord::generator(0))), Some(&int(2)));
    }

    #[test]
    fn word_enumeration_by_degree() {
        let ws = space(&[-1, -1, -1]);
        assert_eq!(ws.words_of_degree(-2).len(), 3);
        assert_eq!(ws.words_of_degree(-3).len(), 1);
        assert_eq!(ws.words_of_degree(-4).len(), 0);
        assert_eq!(ws.words_of_degree(0).len(), 1);
        let mixed = space(&[-1, -2]);
        assert_eq!(mixed.words_of_degree(-3).len(), 1);
        assert_eq!(mixed.words_of_degree(-4).len(), 1);
    }

    #[test]
    fn decalage_round_trip_and_sign() {
        let g = GradedSpace::new([("a", 0), ("b", 0), ("u", -1)]).unwrap();
        let ws = WordSpace::new(g.shift(1)).unwrap();
        let mut br = BracketTable::new();
        br.insert(vec![0, 1], SparseVec::basis(1));
        br.insert(vec![0, 2], SparseVec::basis(2));
        let lam = decalage(&g, &ws, &br).unwrap();
        assert_eq!(decalage(&g, &ws, &inverse_decalage(&g, &lam)).unwrap(), lam);
        for (tuple, value) in &br {
            assert_eq!(&skew_bracket(&g, &ws, &lam, tuple), value);
        }
        assert_eq!(skew_bracket(&g, &ws, &lam, &[1, 0]), SparseVec::basis(1).negated());
        assert_eq!(skew_bracket(&g, &ws, &lam, &[2, 0]), SparseVec::basis(2).negated());
    }

    #[test]
    fn decalage_rejects_inconsistent_orderings() {
        let g = GradedSpace::new([("a", 0), ("b", 0)]).unwrap();
        let ws = WordSpace::new(g.shift(1)).unwrap();
        let mut br = BracketTable::new();
        br.insert(vec![0, 1], SparseVec::basis(0));
        br.insert(vec![1, 0], SparseVec::basis(0));
        assert!(matches!(decalage(&g, &ws, &br), Err(SymError::NonSkew { .. })));
        let mut sq = BracketTable::new();
        sq.insert(vec![0, 0], SparseVec::basis(0));
        assert!(matches!(decalage(&g, &ws, &sq), Err(SymError::NonSkew { .. })));
    }
}
