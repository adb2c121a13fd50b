//! Permutations, value-inversion sets and the right weak order.
//!
//! Permutations are stored in one-line notation on the values `1..=n`.
//! The inversion set of a permutation collects its *value* inversions:
//! pairs `(a, b)` with `a < b` such that `b` appears before `a`. The
//! right weak order is inclusion of value-inversion sets; it is a
//! lattice whose join is the transitive closure of the union.

use crate::tamari::BinaryTree;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    /// The word is not a bijection of 1..=n.
    InvalidWord(Vec<u8>),
    /// Two operands have different sizes.
    SizeMismatch(usize, usize),
    /// A pair set that is not transitive and co-transitive.
    InvalidInversionSet,
    /// A pair (a, b) without 1 <= a < b <= n.
    PairOutOfRange(u8, u8),
    /// Unparseable serialized form.
    Parse(String),
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::InvalidWord(w) => write!(f, "not a permutation word: {w:?}"),
            PermError::SizeMismatch(a, b) => write!(f, "size mismatch: {a} vs {b}"),
            PermError::InvalidInversionSet => write!(f, "not an inversion set"),
            PermError::PairOutOfRange(a, b) => write!(f, "pair ({a},{b}) out of range"),
            PermError::Parse(s) => write!(f, "cannot parse permutation: {s}"),
        }
    }
}

impl std::error::Error for PermError {}

/// A permutation of 1..=n in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u8>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))?;
        }
        Ok(())
    }
}

impl Permutation {
    pub fn new(word: Vec<u8>) -> Result<Self, PermError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(PermError::InvalidWord(word));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u8).collect(),
        }
    }

    /// The maximal permutation n (n-1) ... 1.
    pub fn longest(n: usize) -> Self {
        Permutation {
            word: (1..=n as u8).rev().collect(),
        }
    }

    /// Parses the serialized form: digits for n <= 9, comma separated beyond.
    pub fn parse(s: &str) -> Result<Self, PermError> {
        let vals: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<u8>())
                .collect::<Result<_, _>>()
                .map_err(|_| PermError::Parse(s.to_string()))?
        } else {
            s.trim()
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as u8))
                .collect::<Option<_>>()
                .ok_or_else(|| PermError::Parse(s.to_string()))?
        };
        Permutation::new(vals)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// Position (0-based) of a value in the word.
    pub fn position_of(&self, v: u8) -> usize {
        self.word.iter().position(|&x| x == v).expect("value in range")
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation { word: inv }
    }

    /// The word read backwards; conjugation sending the weak order to its dual.
    pub fn reversed(&self) -> Permutation {
        Permutation {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// Value inversions: pairs (a, b), a < b, with b before a in the word.
    pub fn inversions(&self) -> InversionSet {
        let n = self.len();
        let mut pos = vec![0usize; n + 1];
        for (i, &v) in self.word.iter().enumerate() {
            pos[v as usize] = i;
        }
        let mut pairs = BTreeSet::new();
        for a in 1..=n as u8 {
            for b in (a + 1)..=n as u8 {
                if pos[b as usize] < pos[a as usize] {
                    pairs.insert((a, b));
                }
            }
        }
        InversionSet { n, pairs }
    }

    /// True iff self <= other in the right weak order.
    pub fn weak_le(&self, other: &Permutation) -> Result<bool, PermError> {
        if self.len() != other.len() {
            return Err(PermError::SizeMismatch(self.len(), other.len()));
        }
        Ok(self.inversions().is_subset(&other.inversions()))
    }

    pub fn weak_join(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.len() != other.len() {
            return Err(PermError::SizeMismatch(self.len(), other.len()));
        }
        let mut pairs = self.inversions().pairs;
        pairs.extend(other.inversions().pairs);
        let closed = transitive_closure_pairs(pairs, self.len());
        let set = InversionSet {
            n: self.len(),
            pairs: closed,
        };
        set.to_permutation()
    }

    /// Meet computed through the reversal anti-automorphism of the weak order.
    pub fn weak_meet(&self, other: &Permutation) -> Result<Permutation, PermError> {
        Ok(self
            .reversed()
            .weak_join(&other.reversed())?
            .reversed())
    }

    /// Elements covering self: add one inversion by an adjacent swap.
    pub fn weak_covers(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        for i in 0..self.len().saturating_sub(1) {
            if self.word[i] < self.word[i + 1] {
                let mut w = self.word.clone();
                w.swap(i, i + 1);
                out.push(Permutation { word: w });
            }
        }
        out
    }

    /// Number of value inversions (the weak-order rank).
    pub fn inversion_count(&self) -> usize {
        let mut c = 0;
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                if self.word[i] > self.word[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// True iff some subword standardizes to the pattern.
    pub fn contains_pattern(&self, pat: &Permutation) -> bool {
        let k = pat.len();
        if k > self.len() {
            return false;
        }
        let mut chosen = Vec::with_capacity(k);
        subword_search(&self.word, &pat.word, 0, &mut chosen)
    }

    pub fn avoids_pattern(&self, pat: &Permutation) -> bool {
        !self.contains_pattern(pat)
    }
}

fn subword_search(word: &[u8], pat: &[u8], start: usize, chosen: &mut Vec<u8>) -> bool {
    if chosen.len() == pat.len() {
        return true;
    }
    let k = chosen.len();
    for i in start..word.len() {
        let v = word[i];
        // relative order of v against the already chosen letters must match
        // the pattern's relative order at index k
        let consistent = (0..k).all(|j| (chosen[j] < v) == (pat[j] < pat[k]));
        if consistent {
            chosen.push(v);
            if subword_search(word, pat, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn transitive_closure_pairs(mut pairs: BTreeSet<(u8, u8)>, n: usize) -> BTreeSet<(u8, u8)> {
    loop {
        let mut added = Vec::new();
        for &(a, b) in &pairs {
            for c in (b + 1)..=n as u8 {
                if pairs.contains(&(b, c)) && !pairs.contains(&(a, c)) {
                    added.push((a, c));
                }
            }
        }
        if added.is_empty() {
            return pairs;
        }
        pairs.extend(added);
    }
}

/// A set of value inversions, kept sorted for deterministic iteration.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct InversionSet {
    n: usize,
    pairs: BTreeSet<(u8, u8)>,
}

impl InversionSet {
    pub fn new(n: usize, pairs: BTreeSet<(u8, u8)>) -> Result<Self, PermError> {
        for &(a, b) in &pairs {
            if a == 0 || a >= b || b as usize > n {
                return Err(PermError::PairOutOfRange(a, b));
            }
        }
        Ok(InversionSet { n, pairs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: u8, b: u8) -> bool {
        self.pairs.contains(&(a, b))
    }

    pub fn is_subset(&self, other: &InversionSet) -> bool {
        self.pairs.is_subset(&other.pairs)
    }

    /// Transitive and co-transitive: the characterization of inversion sets.
    pub fn is_valid(&self) -> bool {
        let n = self.n as u8;
        for a in 1..=n {
            for b in (a + 1)..=n {
                for c in (b + 1)..=n {
                    let ab = self.contains(a, b);
                    let bc = self.contains(b, c);
                    let ac = self.contains(a, c);
                    if ab && bc && !ac {
                        return false;
                    }
                    if !ab && !bc && ac {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Rebuilds the permutation whose value inversions are exactly this set.
    pub fn to_permutation(&self) -> Result<Permutation, PermError> {
        if !self.is_valid() {
            return Err(PermError::InvalidInversionSet);
        }
        // b precedes a in the word iff (a, b) is an inversion
        let mut word: Vec<u8> = (1..=self.n as u8).collect();
        word.sort_by(|&x, &y| {
            if x == y {
                return std::cmp::Ordering::Equal;
            }
            let (a, b) = if x < y { (x, y) } else { (y, x) };
            let b_first = self.contains(a, b);
            let x_first = if x < y { !b_first } else { b_first };
            if x_first {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        Ok(Permutation { word })
    }

    /// JSON array of [a, b] pairs.
    pub fn to_json(&self) -> String {
        let items: Vec<String> = self.pairs.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
        format!("[{}]", items.join(","))
    }
}

/// Binary search tree insertion of the values from right to left. The
/// result is the shape whose in-order labels reproduce the search-tree
/// labels, so only the shape is returned.
pub fn sylvester_insert(p: &Permutation) -> BinaryTree {
    struct Node {
        v: u8,
        l: Option<Box<Node>>,
        r: Option<Box<Node>>,
    }
    fn ins(t: &mut Option<Box<Node>>, v: u8) {
        match t {
            None => {
                *t = Some(Box::new(Node {
                    v,
                    l: None,
                    r: None,
                }))
            }
            Some(n) => {
                if v < n.v {
                    ins(&mut n.l, v)
                } else {
                    ins(&mut n.r, v)
                }
            }
        }
    }
    fn shape(t: &Option<Box<Node>>) -> BinaryTree {
        match t {
            None => BinaryTree::Leaf,
            Some(n) => crate::tamari::node(shape(&n.l), shape(&n.r)),
        }
    }
    let mut root = None;
    for &v in p.word().iter().rev() {
        ins(&mut root, v);
    }
    shape(&root)
}

/// The sylvester class of a tree: the fiber of `sylvester_insert`, which
/// is the set of linear extensions of the tree poset.
pub fn sylvester_class(t: &BinaryTree) -> Vec<Permutation> {
    t.linear_extensions()
}

/// All permutations of size n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(Permutation { word: word.clone() });
        if !next_lex(&mut word) {
            return out;
        }
    }
}

fn next_lex(w: &mut [u8]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}
