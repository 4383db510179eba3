//! Brute-force oracles written independently of the library's algorithms.
//!
//! Words of `S(V[1])` are ascending letter lists; the coderivation is summed over all
//! position subsets, and Lie algebra cohomology uses the classical alternating complex.

use std::collections::BTreeMap;

use linfty_core::graded::Scalar;
use linfty_core::linfty::LInftyAlgebra;
use num_traits::{One, Zero};

pub type Word = Vec<usize>;
pub type Combination = BTreeMap<Word, Scalar>;

/// Shifted degrees `|x_i| − 1` of the generators of `S(V[1])`.
pub fn shifted_degrees(g: &LInftyAlgebra) -> Vec<i32> {
    g.space().degrees().iter().map(|d| d - 1).collect()
}

fn odd(d: i32) -> bool {
    d.rem_euclid(2) == 1
}

/// Sorts letters with the Koszul sign; `None` if an odd letter repeats.
pub fn normalize(letters: &[usize], deg: &[i32]) -> Option<(i64, Word)> {
    let mut w = letters.to_vec();
    let mut sign = 1;
    for i in 1..w.len() {
        let mut j = i;
        while j > 0 && w[j - 1] > w[j] {
            if odd(deg[w[j - 1]]) && odd(deg[w[j]]) {
                sign = -sign;
            }
            w.swap(j - 1, j);
            j -= 1;
        }
    }
    if w.windows(2).any(|p| p[0] == p[1] && odd(deg[p[0]])) {
        return None;
    }
    Some((sign, w))
}

/// All words of weight `1..=max_weight`.
pub fn words_up_to(deg: &[i32], max_weight: usize) -> Vec<Word> {
    fn extend(deg: &[i32], from: usize, max: usize, current: &mut Word, out: &mut Vec<Word>) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        if current.len() == max {
            return;
        }
        for i in from..deg.len() {
            if odd(deg[i]) && current.last() == Some(&i) {
                continue;
            }
            current.push(i);
            extend(deg, i, max, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(deg, 0, max_weight, &mut Vec::new(), &mut out);
    out
}

/// The structure maps `λ_k` keyed by ascending words.
pub fn lambda_table(g: &LInftyAlgebra, deg: &[i32]) -> BTreeMap<Word, Vec<(usize, Scalar)>> {
    let mut table = BTreeMap::new();
    for (w, v) in g.lambda() {
        let Some((sign, word)) = normalize(&w.to_vec(), deg) else { continue };
        let value = v.iter().map(|(i, c)| (i, c * Scalar::from_integer(sign.into()))).collect();
        table.insert(word, value);
    }
    table
}

fn add(out: &mut Combination, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let entry = out.entry(w.clone()).or_insert_with(Scalar::zero);
    *entry += c;
    if entry.is_zero() {
        out.remove(&w);
    }
}

/// `D(x_1⋯x_n) = Σ_I ε(I) λ(x_I)·x_{I^c}` over nonempty position subsets `I`.
pub fn coderivation(table: &BTreeMap<Word, Vec<(usize, Scalar)>>, deg: &[i32], word: &[usize]) -> Combination {
    let n = word.len();
    let mut out = Combination::new();
    for mask in 1u32..(1 << n) {
        let inside: Word = (0..n).filter(|&p| mask & (1 << p) != 0).map(|p| word[p]).collect();
        let Some(value) = table.get(&inside) else { continue };
        let mut sign: i64 = 1;
        for i in 0..n {
            for j in 0..i {
                let (i_in, j_in) = (mask & (1 << i) != 0, mask & (1 << j) != 0);
                if i_in && !j_in && odd(deg[word[i]]) && odd(deg[word[j]]) {
                    sign = -sign;
                }
            }
        }
        let rest: Word = (0..n).filter(|&p| mask & (1 << p) == 0).map(|p| word[p]).collect();
        for (k, c) in value {
            let mut letters = vec![*k];
            letters.extend(&rest);
            if let Some((s, w)) = normalize(&letters, deg) {
                add(&mut out, w, c * Scalar::from_integer((sign * s).into()));
            }
        }
    }
    out
}

/// `D²` on a single word.
pub fn coderivation_square(table: &BTreeMap<Word, Vec<(usize, Scalar)>>, deg: &[i32], word: &[usize]) -> Combination {
    let mut out = Combination::new();
    for (w, c) in coderivation(table, deg, word) {
        for (u, d) in coderivation(table, deg, &w) {
            add(&mut out, u, &c * d);
        }
    }
    out
}

/// Rank of a dense rational matrix by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for k in c..ncols {
                    let delta = &f * &rows[r][k];
                    rows[i][k] -= delta;
                }
            }
        }
        r += 1;
    }
    r
}

/// A Lie algebra with a module, as dense structure constants and action matrices.
pub struct LieModule {
    pub dim: usize,
    /// `bracket[i][j]` = coordinates of `[x_i, x_j]`.
    pub bracket: Vec<Vec<Vec<Scalar>>>,
    /// `action[i]` = matrix of `x_i` on the module, row-major.
    pub action: Vec<Vec<Vec<Scalar>>>,
    pub module_dim: usize,
}

impl LieModule {
    pub fn trivial(dim: usize, structure: &BTreeMap<(usize, usize), Vec<(usize, Scalar)>>, module_dim: usize) -> Self {
        let mut bracket = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
        for (&(i, j), v) in structure {
            for (k, c) in v {
                bracket[i][j][*k] += c;
                bracket[j][i][*k] -= c;
            }
        }
        let action = vec![vec![vec![Scalar::zero(); module_dim]; module_dim]; dim];
        LieModule { dim, bracket, action, module_dim }
    }

    fn subsets(&self, p: usize) -> Vec<Word> {
        fn go(n: usize, p: usize, from: usize, cur: &mut Word, out: &mut Vec<Word>) {
            if cur.len() == p {
                out.push(cur.clone());
                return;
            }
            for i in from..n {
                cur.push(i);
                go(n, p, i + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(self.dim, p, 0, &mut Vec::new(), &mut out);
        out
    }

    /// Sign and sorted form of a tuple of distinct indices; `None` on repeats.
    fn sort_tuple(t: &[usize]) -> Option<(i64, Word)> {
        let mut w = t.to_vec();
        let mut sign = 1;
        for i in 1..w.len() {
            let mut j = i;
            while j > 0 && w[j - 1] > w[j] {
                w.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if w.windows(2).any(|p| p[0] == p[1]) {
            return None;
        }
        Some((sign, w))
    }

    /// Matrix of `d: C^p → C^{p+1}` in the basis (subset, module index), as rows.
    pub fn differential(&self, p: usize) -> Vec<Vec<Scalar>> {
        let src = self.subsets(p);
        let tgt = self.subsets(p + 1);
        let m = self.module_dim;
        let src_index: BTreeMap<&Word, usize> = src.iter().enumerate().map(|(k, s)| (s, k)).collect();
        let mut rows = vec![vec![Scalar::zero(); src.len() * m]; tgt.len() * m];
        for (ti, t) in tgt.iter().enumerate() {
            // ρ(x_i) ω(…x̂_i…)
            for i in 0..t.len() {
                let rest: Word = t.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &x)| x).collect();
                let s = src_index[&rest];
                let sign = if i % 2 == 0 { Scalar::one() } else { -Scalar::one() };
                for a in 0..m {
                    for b in 0..m {
                        let c = &self.action[t[i]][a][b];
                        if !c.is_zero() {
                            rows[ti * m + a][s * m + b] += &sign * c;
                        }
                    }
                }
            }
            // ω([x_i, x_j], …x̂_i…x̂_j…)
            for i in 0..t.len() {
                for j in i + 1..t.len() {
                    let sign: i64 = if (i + j) % 2 == 0 { 1 } else { -1 };
                    let rest: Word =
                        t.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, &x)| x).collect();
                    for (k, c) in self.bracket[t[i]][t[j]].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut tuple = vec![k];
                        tuple.extend(&rest);
                        let Some((s2, sorted)) = Self::sort_tuple(&tuple) else { continue };
                        let s = src_index[&sorted];
                        for a in 0..m {
                            rows[ti * m + a][s * m + a] += c * Scalar::from_integer((sign * s2).into());
                        }
                    }
                }
            }
        }
        rows
    }

    /// `dim H^p` for `p = 0..=top`.
    pub fn cohomology_dims(&self, top: usize) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=top).map(|p| rank(self.differential(p))).collect();
        (0..=top)
            .map(|p| {
                let cochains = self.subsets(p).len() * self.module_dim;
                let incoming = if p == 0 { 0 } else { ranks[p - 1] };
                cochains - ranks[p] - incoming
            })
            .collect()
    }

    /// Whether a `p`-cochain (coordinates on subset × module index) is a coboundary.
    pub fn is_exact(&self, p: usize, cochain: &[Scalar]) -> bool {
        if p == 0 {
            return cochain.iter().all(Zero::is_zero);
        }
        let d = self.differential(p - 1);
        let base = rank(d.clone());
        let mut augmented = d;
        for (row, c) in augmented.iter_mut().zip(cochain) {
            row.push(c.clone());
        }
        rank(augmented) == base
    }

    /// Coordinates of a cochain given as `ascending subset → module vector`.
    pub fn dense_cochain(&self, p: usize, values: &BTreeMap<Word, Vec<(usize, Scalar)>>) -> Vec<Scalar> {
        let m = self.module_dim;
        let subsets = self.subsets(p);
        let mut out = vec![Scalar::zero(); subsets.len() * m];
        for (k, s) in subsets.iter().enumerate() {
            if let Some(v) = values.get(s) {
                for (a, c) in v {
                    out[k * m + a] = c.clone();
                }
            }
        }
        out
    }
}
