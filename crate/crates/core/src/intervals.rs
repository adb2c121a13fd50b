//! Tamari interval-posets and their machinery: the bijection with pairs
//! of comparable trees, grafting trees, interval statistics (contacts,
//! rises, descents, distance), the complement / left-branch / rise-contact
//! involutions and the m-Tamari specialization.
//!
//! An interval-poset stores the full transitive relation split into
//! increasing relations (a before c, for a < c) and decreasing relations
//! (c before a). Relation queries are O(1) set lookups.

use crate::perm::Permutation;
use crate::poly::{BivarPoly, UniPoly};
use crate::tamari::{enumerate_trees, node, BinaryTree};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntervalError {
    /// The decreasing forest of the lower tree and the increasing forest
    /// of the upper tree have no common linear extension.
    IncompatibleTrees,
    NotAnIntervalPoset(String),
    SizeMismatch(usize, usize),
    /// Grafting label above the right-subtree slack.
    LabelBound { node: usize, label: u32, max: u32 },
    /// Composition attachment outside 0..=contacts.
    AttachmentOutOfRange { r: usize, contacts: usize },
    /// Size not divisible by m, or the chain condition fails.
    NotMInterval,
    /// Expand/contract precondition failure.
    NotMDivisible,
}

impl fmt::Display for IntervalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalError::IncompatibleTrees => write!(f, "trees are not comparable"),
            IntervalError::NotAnIntervalPoset(s) => write!(f, "not an interval-poset: {s}"),
            IntervalError::SizeMismatch(a, b) => write!(f, "size mismatch: {a} vs {b}"),
            IntervalError::LabelBound { node, label, max } => {
                write!(f, "label {label} at node {node} exceeds bound {max}")
            }
            IntervalError::AttachmentOutOfRange { r, contacts } => {
                write!(f, "attachment {r} outside 0..={contacts}")
            }
            IntervalError::NotMInterval => write!(f, "not an m-Tamari interval"),
            IntervalError::NotMDivisible => write!(f, "vectors are not m-divisible"),
        }
    }
}

impl std::error::Error for IntervalError {}

/// A Tamari interval-poset on 1..=n.
///
/// `inc` holds pairs (a, c) with a < c and a before c; `dec` holds pairs
/// (a, c) with a < c and c before a. The union is transitively closed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntervalPoset {
    n: usize,
    inc: BTreeSet<(u8, u8)>,
    dec: BTreeSet<(u8, u8)>,
}

impl fmt::Debug for IntervalPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntervalPoset({})", self.to_json())
    }
}

impl IntervalPoset {
    /// Builds from raw relations, closing transitively and validating the
    /// interval-poset conditions.
    pub fn new(
        n: usize,
        inc: impl IntoIterator<Item = (u8, u8)>,
        dec: impl IntoIterator<Item = (u8, u8)>,
    ) -> Result<Self, IntervalError> {
        let inc: BTreeSet<(u8, u8)> = inc.into_iter().collect();
        let dec: BTreeSet<(u8, u8)> = dec.into_iter().collect();
        for &(a, c) in inc.iter().chain(dec.iter()) {
            if a == 0 || a >= c || c as usize > n {
                return Err(IntervalError::NotAnIntervalPoset(format!(
                    "pair ({a},{c}) out of range"
                )));
            }
        }
        let (inc, dec) = close_relations(n, inc, dec)?;
        let p = IntervalPoset { n, inc, dec };
        p.check_conditions()?;
        Ok(p)
    }

    /// Checks the two triple conditions without altering the relations.
    fn check_conditions(&self) -> Result<(), IntervalError> {
        for &(a, c) in &self.inc {
            for b in (a + 1)..c {
                if !self.inc.contains(&(b, c)) {
                    return Err(IntervalError::NotAnIntervalPoset(format!(
                        "{a} before {c} needs {b} before {c}"
                    )));
                }
            }
        }
        for &(a, c) in &self.dec {
            for b in (a + 1)..c {
                if !self.dec.contains(&(a, b)) {
                    return Err(IntervalError::NotAnIntervalPoset(format!(
                        "{c} before {a} needs {b} before {a}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn inc_pairs(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.inc.iter().copied()
    }

    pub fn dec_pairs(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.dec.iter().copied()
    }

    /// True iff x is before y in the poset.
    pub fn precedes(&self, x: u8, y: u8) -> bool {
        if x < y {
            self.inc.contains(&(x, y))
        } else if y < x {
            self.dec.contains(&(y, x))
        } else {
            false
        }
    }

    /// The unique interval-poset of size 1.
    pub fn singleton() -> Self {
        IntervalPoset {
            n: 1,
            inc: BTreeSet::new(),
            dec: BTreeSet::new(),
        }
    }

    /// The antichain on 1..=n: the full interval [min tree, max tree].
    pub fn antichain(n: usize) -> Self {
        IntervalPoset {
            n,
            inc: BTreeSet::new(),
            dec: BTreeSet::new(),
        }
    }

    /// Merges the decreasing forest of `lower` with the increasing forest
    /// of `upper`; succeeds exactly when lower <= upper in the Tamari order.
    pub fn from_tree_pair(lower: &BinaryTree, upper: &BinaryTree) -> Result<Self, IntervalError> {
        if lower.size() != upper.size() {
            return Err(IntervalError::SizeMismatch(lower.size(), upper.size()));
        }
        let n = lower.size();
        let dec: BTreeSet<(u8, u8)> = lower.decreasing_relations().into_iter().collect();
        let inc: BTreeSet<(u8, u8)> = upper.increasing_relations().into_iter().collect();
        let (inc, dec) = close_relations(n, inc, dec).map_err(|_| IntervalError::IncompatibleTrees)?;
        let p = IntervalPoset { n, inc, dec };
        p.check_conditions()
            .map_err(|_| IntervalError::IncompatibleTrees)?;
        Ok(p)
    }

    /// The (lower, upper) tree pair of the interval.
    pub fn to_tree_pair(&self) -> (BinaryTree, BinaryTree) {
        let lower = crate::perm::sylvester_insert(&self.min_linear_extension());
        let upper = crate::perm::sylvester_insert(&self.max_linear_extension());
        (lower, upper)
    }

    /// Smallest linear extension in the weak order.
    pub fn min_linear_extension(&self) -> Permutation {
        self.greedy_extension(true)
    }

    /// Largest linear extension in the weak order.
    pub fn max_linear_extension(&self) -> Permutation {
        self.greedy_extension(false)
    }

    fn greedy_extension(&self, smallest: bool) -> Permutation {
        let n = self.n;
        let mut placed = vec![false; n + 1];
        let mut word: Vec<u8> = Vec::with_capacity(n);
        while word.len() < n {
            let mut picked = 0;
            let candidates: Box<dyn Iterator<Item = usize>> = if smallest {
                Box::new(1..=n)
            } else {
                Box::new((1..=n).rev())
            };
            for v in candidates {
                if placed[v] {
                    continue;
                }
                let free = (1..=n)
                    .all(|u| placed[u] || u == v || !self.precedes(u as u8, v as u8));
                if free {
                    picked = v;
                    break;
                }
            }
            placed[picked] = true;
            word.push(picked as u8);
        }
        Permutation::new(word).expect("valid word")
    }

    /// The weak-order interval carrying the linear extensions.
    pub fn linear_extension_interval(&self) -> (Permutation, Permutation) {
        (self.min_linear_extension(), self.max_linear_extension())
    }

    /// All linear extensions; exponential, for desk-scale checks only.
    pub fn all_linear_extensions(&self) -> Vec<Permutation> {
        let n = self.n;
        let mut placed = vec![false; n + 1];
        let mut word = Vec::with_capacity(n);
        let mut out = Vec::new();
        fn rec(
            p: &IntervalPoset,
            placed: &mut Vec<bool>,
            word: &mut Vec<u8>,
            out: &mut Vec<Permutation>,
        ) {
            let n = p.n;
            if word.len() == n {
                out.push(Permutation::new(word.clone()).expect("valid"));
                return;
            }
            for v in 1..=n {
                if placed[v] {
                    continue;
                }
                let free = (1..=n).all(|u| placed[u] || u == v || !p.precedes(u as u8, v as u8));
                if free {
                    placed[v] = true;
                    word.push(v as u8);
                    rec(p, placed, word, out);
                    word.pop();
                    placed[v] = false;
                }
            }
        }
        rec(self, &mut placed, &mut word, &mut out);
        out
    }

    /// Connected components of the decreasing forest, ordered by their
    /// smallest element. Isolated vertices are components.
    pub fn dec_components(&self) -> Vec<Vec<u8>> {
        let n = self.n;
        let mut comp: Vec<usize> = (0..=n).collect();
        fn find(comp: &mut Vec<usize>, x: usize) -> usize {
            if comp[x] != x {
                let r = find(comp, comp[x]);
                comp[x] = r;
            }
            comp[x]
        }
        for &(a, c) in &self.dec {
            let (ra, rc) = (find(&mut comp, a as usize), find(&mut comp, c as usize));
            if ra != rc {
                comp[ra.max(rc)] = ra.min(rc);
            }
        }
        let mut groups: Vec<Vec<u8>> = Vec::new();
        let mut root_of: Vec<Option<usize>> = vec![None; n + 1];
        for v in 1..=n {
            let r = find(&mut comp, v);
            match root_of[r] {
                Some(g) => groups[g].push(v as u8),
                None => {
                    root_of[r] = Some(groups.len());
                    groups.push(vec![v as u8]);
                }
            }
        }
        groups.sort_by_key(|g| g[0]);
        groups
    }

    /// The contact value: number of components of the decreasing forest.
    pub fn contact_value(&self) -> usize {
        self.dec_components().len()
    }

    /// Children of node v in the decreasing forest.
    pub fn dec_children(&self, v: u8) -> Vec<u8> {
        let mut out = Vec::new();
        for c in (v + 1)..=self.n as u8 {
            if self.dec.contains(&(v, c)) {
                // direct child: no intermediate b with c before b before v
                let direct =
                    !((v + 1)..c).any(|b| self.dec.contains(&(b, c)) && self.dec.contains(&(v, b)));
                if direct {
                    out.push(c);
                }
            }
        }
        out
    }

    pub fn to_grafting(&self) -> GraftingTree {
        fn rec(p: &IntervalPoset) -> (BinaryTree, Vec<u32>) {
            if p.n == 0 {
                return (BinaryTree::Leaf, Vec::new());
            }
            let (_, i, j, r) = p.decompose().expect("nonempty poset decomposes");
            let (ls, ll) = rec(&i);
            let (rs, rl) = rec(&j);
            let mut labels = ll;
            labels.push(r as u32);
            labels.extend(rl);
            (node(ls, rs), labels)
        }
        let (shape, labels) = rec(self);
        GraftingTree { shape, labels }
    }

    /// Splits off the root of the upper tree: returns (m, I, J, r) where m
    /// is the split node, I and J the restrictions and r the number of
    /// decreasing-forest components of J attached below m.
    pub fn decompose(&self) -> Option<(usize, IntervalPoset, IntervalPoset, usize)> {
        if self.n == 0 {
            return None;
        }
        let m = (1..=self.n)
            .filter(|&m| (1..m).all(|i| self.inc.contains(&(i as u8, m as u8))))
            .max()
            .expect("1 always qualifies");
        let i = self.restrict(1, m.saturating_sub(1));
        let j = self.restrict(m + 1, self.n);
        let r = j
            .dec_components()
            .iter()
            .filter(|comp| {
                comp.iter()
                    .any(|&c| self.dec.contains(&(m as u8, c + m as u8)))
            })
            .count();
        Some((m, i, j, r))
    }

    /// Restriction to the labels lo..=hi, relabeled to 1..=(hi-lo+1).
    fn restrict(&self, lo: usize, hi: usize) -> IntervalPoset {
        if lo > hi {
            return IntervalPoset {
                n: 0,
                inc: BTreeSet::new(),
                dec: BTreeSet::new(),
            };
        }
        let shift = (lo - 1) as u8;
        let keep = |&(a, c): &(u8, u8)| a as usize >= lo && c as usize <= hi;
        IntervalPoset {
            n: hi - lo + 1,
            inc: self.inc.iter().filter(|p| keep(p)).map(|&(a, c)| (a - shift, c - shift)).collect(),
            dec: self.dec.iter().filter(|p| keep(p)).map(|&(a, c)| (a - shift, c - shift)).collect(),
        }
    }

    /// Composition with a new middle node: all of `left` goes below the new
    /// node in the increasing forest, and the first r decreasing components
    /// of `right` attach under it.
    pub fn compose(
        left: &IntervalPoset,
        right: &IntervalPoset,
        r: usize,
    ) -> Result<IntervalPoset, IntervalError> {
        let comps = right.dec_components();
        if r > comps.len() && !(right.n == 0 && r == 0) {
            return Err(IntervalError::AttachmentOutOfRange {
                r,
                contacts: comps.len(),
            });
        }
        if right.n == 0 && r > 0 {
            return Err(IntervalError::AttachmentOutOfRange { r, contacts: 0 });
        }
        let k = left.n;
        let m = (k + 1) as u8;
        let n = left.n + 1 + right.n;
        let mut inc: BTreeSet<(u8, u8)> = left.inc.clone();
        let mut dec: BTreeSet<(u8, u8)> = left.dec.clone();
        for i in 1..=k as u8 {
            inc.insert((i, m));
        }
        for &(a, c) in &right.inc {
            inc.insert((a + m, c + m));
        }
        for &(a, c) in &right.dec {
            dec.insert((a + m, c + m));
        }
        for comp in comps.iter().take(r) {
            for &c in comp {
                dec.insert((m, c + m));
            }
        }
        IntervalPoset::new(n, inc, dec)
    }

    /// All compositions of two interval-posets: one per attachment count.
    pub fn compose_all(left: &IntervalPoset, right: &IntervalPoset) -> Vec<IntervalPoset> {
        (0..=right.dec_components().len())
            .map(|r| IntervalPoset::compose(left, right, r).expect("valid attachment"))
            .collect()
    }

    /// Contact vector read off the grafting tree.
    pub fn contact_vector(&self) -> Vec<u32> {
        self.to_grafting().contact_vector()
    }

    /// Rise vector of the upper Dyck path: initial rise, then the up-run
    /// after each of the first n-1 down steps.
    pub fn rise_vector(&self) -> Vec<u32> {
        let (_, upper) = self.to_tree_pair();
        let word = upper.to_dyck().word().to_vec();
        let mut out = Vec::with_capacity(self.n);
        let mut rise = 0u32;
        for &b in &word {
            if b {
                rise += 1;
            } else {
                break;
            }
        }
        out.push(rise);
        let mut downs_seen = 0usize;
        for i in 0..word.len() {
            if !word[i] {
                downs_seen += 1;
                if downs_seen == self.n {
                    break;
                }
                let mut ups = 0u32;
                for &b in &word[i + 1..] {
                    if b {
                        ups += 1;
                    } else {
                        break;
                    }
                }
                out.push(ups);
            }
        }
        out
    }

    /// Descent vector of the upper Dyck path: the down-run after each up
    /// step, read from right to left.
    pub fn descent_vector(&self) -> Vec<u32> {
        let (_, upper) = self.to_tree_pair();
        let word = upper.to_dyck().word().to_vec();
        let mut per_up = Vec::with_capacity(self.n);
        for i in 0..word.len() {
            if word[i] {
                let mut downs = 0u32;
                for &b in &word[i + 1..] {
                    if b {
                        break;
                    }
                    downs += 1;
                }
                per_up.push(downs);
            }
        }
        per_up.reverse();
        per_up
    }

    /// Contact vector recomputed from the lower Dyck path, for cross checks:
    /// returns to the axis, then per up step the returns of its subpath.
    pub fn contact_vector_from_lower_path(&self) -> Vec<u32> {
        let (lower, _) = self.to_tree_pair();
        let word = lower.to_dyck().word().to_vec();
        let mut out = Vec::with_capacity(self.n);
        let mut level = 0i64;
        let mut c0 = 0u32;
        for &b in &word {
            level += if b { 1 } else { -1 };
            if level == 0 {
                c0 += 1;
            }
        }
        out.push(c0);
        let mut ups_seen = 0;
        for i in 0..word.len() {
            if word[i] {
                ups_seen += 1;
                if ups_seen >= self.n {
                    break;
                }
                // subpath strictly before the matching down step
                let mut depth = 0i64;
                let mut contacts = 0u32;
                for &b in &word[i + 1..] {
                    depth += if b { 1 } else { -1 };
                    if depth < 0 {
                        break;
                    }
                    if depth == 0 {
                        contacts += 1;
                    }
                }
                out.push(contacts);
            }
        }
        out
    }

    /// Tamari inversions: pairs (a, c) with no b in [a, c) below c and no
    /// b in (a, c] above a.
    pub fn tamari_inversions(&self) -> Vec<(u8, u8)> {
        let n = self.n as u8;
        let mut out = Vec::new();
        for a in 1..=n {
            for c in (a + 1)..=n {
                let blocked = (a..c).any(|b| self.precedes(c, b))
                    || ((a + 1)..=c).any(|b| self.precedes(a, b));
                if !blocked {
                    out.push((a, c));
                }
            }
        }
        out
    }

    /// Length of the maximal chain from the lower to the upper tree.
    pub fn distance(&self) -> usize {
        self.tamari_inversions().len()
    }

    /// The complement involution: relabels i to n+1-i, exchanging the
    /// increasing and decreasing relations.
    pub fn complement(&self) -> IntervalPoset {
        let n = self.n as u8;
        let flip = |&(a, c): &(u8, u8)| (n + 1 - c, n + 1 - a);
        IntervalPoset {
            n: self.n,
            inc: self.dec.iter().map(flip).collect(),
            dec: self.inc.iter().map(flip).collect(),
        }
    }

    /// The left-branch involution, acting on the grafting tree.
    pub fn left_branch(&self) -> IntervalPoset {
        self.to_grafting()
            .left_branch()
            .to_interval()
            .expect("left branch preserves validity")
    }

    /// The rise-contact involution: left-branch, complement, left-branch.
    pub fn rise_contact(&self) -> IntervalPoset {
        self.left_branch().complement().left_branch()
    }

    /// True iff the poset encodes an m-Tamari interval of size n*m.
    pub fn is_m_interval(&self, m: usize) -> Result<bool, IntervalError> {
        if m == 0 || !self.n.is_multiple_of(m) {
            return Err(IntervalError::NotMInterval);
        }
        let n = self.n / m;
        for i in 1..=n {
            for j in 0..(m - 1) {
                let hi = (i * m - j) as u8;
                let lo = (i * m - j - 1) as u8;
                if !self.precedes(hi, lo) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The m-rise-contact involution on m-Tamari intervals.
    pub fn m_rise_contact(&self, m: usize) -> Result<IntervalPoset, IntervalError> {
        if !self.is_m_interval(m)? {
            return Err(IntervalError::NotMInterval);
        }
        let expanded = self.to_grafting().expand(m)?;
        let image = expanded.to_interval()?.rise_contact();
        let contracted = image.to_grafting().contract(m)?;
        contracted.to_interval()
    }

    /// m-contact vector: the contact vector of the expanded grafting tree,
    /// divided by m.
    pub fn m_contact_vector(&self, m: usize) -> Result<Vec<u32>, IntervalError> {
        let e = self.to_grafting().expand(m)?;
        Ok(e.contact_vector().iter().map(|&c| c / m as u32).collect())
    }

    /// m-rise vector: the rise vector of the expanded interval, divided by m.
    pub fn m_rise_vector(&self, m: usize) -> Result<Vec<u32>, IntervalError> {
        let e = self.to_grafting().expand(m)?.to_interval()?;
        Ok(e.rise_vector().iter().map(|&c| c / m as u32).collect())
    }

    /// Serialization: `{"n":n,"inc":[[a,c]..],"dec":[[c,a]..]}` where dec
    /// pairs are written larger-first to show the orientation.
    pub fn to_json(&self) -> String {
        let inc: Vec<String> = self.inc.iter().map(|(a, c)| format!("[{a},{c}]")).collect();
        let dec: Vec<String> = self.dec.iter().map(|(a, c)| format!("[{c},{a}]")).collect();
        format!(
            "{{\"n\":{},\"inc\":[{}],\"dec\":[{}]}}",
            self.n,
            inc.join(","),
            dec.join(",")
        )
    }
}

/// Closes the union relation transitively; fails on a cycle. Returns the
/// closed relation split back into increasing and decreasing parts.
#[allow(clippy::type_complexity)]
fn close_relations(
    n: usize,
    inc: BTreeSet<(u8, u8)>,
    dec: BTreeSet<(u8, u8)>,
) -> Result<(BTreeSet<(u8, u8)>, BTreeSet<(u8, u8)>), IntervalError> {
    let mut before = vec![vec![false; n + 1]; n + 1];
    for &(a, c) in &inc {
        before[a as usize][c as usize] = true;
    }
    for &(a, c) in &dec {
        before[c as usize][a as usize] = true;
    }
    for k in 1..=n {
        for i in 1..=n {
            if before[i][k] {
                for j in 1..=n {
                    if before[k][j] {
                        before[i][j] = true;
                    }
                }
            }
        }
    }
    for i in 1..=n {
        if before[i][i] {
            return Err(IntervalError::NotAnIntervalPoset("cycle".into()));
        }
        for j in (i + 1)..=n {
            if before[i][j] && before[j][i] {
                return Err(IntervalError::NotAnIntervalPoset("cycle".into()));
            }
        }
    }
    let mut new_inc = BTreeSet::new();
    let mut new_dec = BTreeSet::new();
    for a in 1..=n {
        for c in (a + 1)..=n {
            if before[a][c] {
                new_inc.insert((a as u8, c as u8));
            }
            if before[c][a] {
                new_dec.insert((a as u8, c as u8));
            }
        }
    }
    Ok((new_inc, new_dec))
}

/// Checks the interval-poset axioms on raw relations without closing:
/// transitivity and antisymmetry of the union plus both triple conditions.
pub fn is_interval_poset(
    n: usize,
    inc: &BTreeSet<(u8, u8)>,
    dec: &BTreeSet<(u8, u8)>,
) -> bool {
    let pre = |x: u8, y: u8| {
        if x < y {
            inc.contains(&(x, y))
        } else if y < x {
            dec.contains(&(y, x))
        } else {
            false
        }
    };
    for x in 1..=n as u8 {
        for y in 1..=n as u8 {
            if x != y && pre(x, y) && pre(y, x) {
                return false;
            }
            for z in 1..=n as u8 {
                if x != y && y != z && x != z && pre(x, y) && pre(y, z) && !pre(x, z) {
                    return false;
                }
            }
        }
    }
    for &(a, c) in inc {
        if a >= c || c as usize > n || a == 0 {
            return false;
        }
        for b in (a + 1)..c {
            if !inc.contains(&(b, c)) {
                return false;
            }
        }
    }
    for &(a, c) in dec {
        if a >= c || c as usize > n || a == 0 {
            return false;
        }
        for b in (a + 1)..c {
            if !dec.contains(&(a, b)) {
                return false;
            }
        }
    }
    true
}

/// All interval-posets of size n, enumerated through comparable tree pairs
/// in tree-enumeration order.
pub fn enumerate_interval_posets(n: usize) -> Vec<IntervalPoset> {
    let trees = enumerate_trees(n);
    let mut out = Vec::new();
    for lower in &trees {
        for upper in &trees {
            if let Ok(p) = IntervalPoset::from_tree_pair(lower, upper) {
                out.push(p);
            }
        }
    }
    out
}

pub fn count_intervals(n: usize) -> usize {
    enumerate_interval_posets(n).len()
}

fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// The closed product formula for the number of Tamari intervals.
pub fn interval_count_formula(n: usize) -> u128 {
    // 2 (4n+1)! / ((n+1)! (3n+2)!) = 2/(n(n+1)) binom(4n+1, n-1)
    if n == 0 {
        return 1;
    }
    let n = n as u128;
    2 * binom(4 * n + 1, n - 1) / (n * (n + 1))
}

/// Coefficients of z^0..z^max in the catalytic functional equation at x=1.
pub fn interval_counts_from_functional_equation(max: usize) -> Vec<i64> {
    // phi(z, x) = 1 + z x phi(z, x) * divided_difference(phi(z, x))
    // represented as a vector of x-polynomials indexed by z-degree
    let mut phi: Vec<UniPoly> = vec![UniPoly::one()];
    for _ in 0..=max {
        let mut next: Vec<UniPoly> = vec![UniPoly::zero(); max + 1];
        next[0] = UniPoly::one();
        for d in 0..max {
            // coefficient of z^{d+1} in x * phi * delta(phi)
            let mut acc = UniPoly::zero();
            for k in 0..=d {
                let a = phi.get(k).cloned().unwrap_or_else(UniPoly::zero);
                let b = phi.get(d - k).cloned().unwrap_or_else(UniPoly::zero);
                acc = acc.add(&a.mul(&b.divided_difference()));
            }
            next[d + 1] = UniPoly::x().mul(&acc);
        }
        if next == phi {
            break;
        }
        phi = next;
    }
    (0..=max)
        .map(|d| phi.get(d).map(|p| p.eval_one()).unwrap_or(0))
        .collect()
}

/// Triple agreement between enumeration, closed formula and functional
/// equation.
pub fn interval_generating_check(n: usize) -> bool {
    let enumerated = count_intervals(n) as u128;
    let formula = interval_count_formula(n);
    let series = interval_counts_from_functional_equation(n);
    enumerated == formula && series[n] as u128 == enumerated
}

/// The Tamari polynomial of a tree: BT_leaf = 1 and
/// BT_T(x) = x BT_L(x) (x BT_R(x) - BT_R(1)) / (x - 1); its value at 1
/// counts the trees below T.
pub fn bt_polynomial(t: &BinaryTree) -> UniPoly {
    match t {
        BinaryTree::Leaf => UniPoly::one(),
        BinaryTree::Node(l, r) => {
            let bl = bt_polynomial(l);
            let br = bt_polynomial(r);
            UniPoly::x().mul(&bl).mul(&br.divided_difference())
        }
    }
}

/// Number of m-Tamari intervals by exhaustive enumeration.
pub fn count_m_intervals(m: usize, n: usize) -> usize {
    enumerate_interval_posets(n * m)
        .into_iter()
        .filter(|p| p.is_m_interval(m).unwrap_or(false))
        .count()
}

/// The conjectured-and-proved product formula for m-Tamari intervals.
pub fn m_interval_count_formula(m: usize, n: usize) -> u128 {
    let (m, n) = (m as u128, n as u128);
    (m + 1) * binom((m + 1) * (m + 1) * n + m, n - 1) / (n * (m * n + 1))
}

/// Sum of q^distance over all intervals of size n.
pub fn distance_polynomial(n: usize) -> BivarPoly {
    let mut out = BivarPoly::zero();
    for p in enumerate_interval_posets(n) {
        out.add_term(p.distance() as u32, 0, 1);
    }
    out
}

/// A labeled binary tree encoding a Tamari interval: the shape is the
/// upper tree and the label of a node counts its decreasing-forest
/// children, bounded by the slack of its right subtree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraftingTree {
    shape: BinaryTree,
    /// labels in in-order, one per node
    labels: Vec<u32>,
}

/// Internal recursive form used by the left-branch involution.
enum LTree {
    Leaf,
    Node(Box<LTree>, u32, Box<LTree>),
}

impl GraftingTree {
    pub fn new(shape: BinaryTree, labels: Vec<u32>) -> Result<Self, IntervalError> {
        if shape.size() != labels.len() {
            return Err(IntervalError::SizeMismatch(shape.size(), labels.len()));
        }
        let g = GraftingTree { shape, labels };
        g.validate()?;
        Ok(g)
    }

    pub fn shape(&self) -> &BinaryTree {
        &self.shape
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// Bound check: each label is at most the size of the right subtree
    /// minus the sum of its labels.
    pub fn validate(&self) -> Result<(), IntervalError> {
        fn rec(t: &BinaryTree, offset: usize, labels: &[u32]) -> Result<(), IntervalError> {
            if let BinaryTree::Node(l, r) = t {
                let me = offset + l.size() + 1;
                let right_size = r.size() as u32;
                let right_sum: u32 = (me..me + r.size()).map(|i| labels[i]).sum();
                let max = right_size - right_sum;
                if labels[me - 1] > max {
                    return Err(IntervalError::LabelBound {
                        node: me,
                        label: labels[me - 1],
                        max,
                    });
                }
                rec(l, offset, labels)?;
                rec(r, me, labels)?;
            }
            Ok(())
        }
        rec(&self.shape, 0, &self.labels)
    }

    pub fn to_interval(&self) -> Result<IntervalPoset, IntervalError> {
        fn rec(t: &BinaryTree, offset: usize, labels: &[u32]) -> Result<IntervalPoset, IntervalError> {
            match t {
                BinaryTree::Leaf => Ok(IntervalPoset {
                    n: 0,
                    inc: BTreeSet::new(),
                    dec: BTreeSet::new(),
                }),
                BinaryTree::Node(l, r) => {
                    let me = offset + l.size() + 1;
                    let left = rec(l, offset, labels)?;
                    let right = rec(r, me, labels)?;
                    IntervalPoset::compose(&left, &right, labels[me - 1] as usize)
                }
            }
        }
        rec(&self.shape, 0, &self.labels)
    }

    /// Contact vector: n minus the label sum, then the labels of nodes
    /// 1..n-1 in in-order.
    pub fn contact_vector(&self) -> Vec<u32> {
        let n = self.labels.len();
        let total: u32 = self.labels.iter().sum();
        let mut out = Vec::with_capacity(n);
        out.push(n as u32 - total);
        out.extend_from_slice(&self.labels[..n.saturating_sub(1)]);
        out
    }

    /// Per-node deficit: right-subtree slack minus the label; the sum is
    /// the distance of the interval.
    pub fn deficits(&self) -> Vec<u32> {
        let n = self.labels.len();
        let mut out = vec![0u32; n];
        fn rec(t: &BinaryTree, offset: usize, labels: &[u32], out: &mut [u32]) {
            if let BinaryTree::Node(l, r) = t {
                let me = offset + l.size() + 1;
                let right_size = r.size() as u32;
                let right_sum: u32 = (me..me + r.size()).map(|i| labels[i]).sum();
                out[me - 1] = right_size - right_sum - labels[me - 1];
                rec(l, offset, labels, out);
                rec(r, me, labels, out);
            }
        }
        rec(&self.shape, 0, &self.labels, &mut out);
        out
    }

    fn to_ltree(&self) -> LTree {
        fn rec(t: &BinaryTree, offset: usize, labels: &[u32]) -> LTree {
            match t {
                BinaryTree::Leaf => LTree::Leaf,
                BinaryTree::Node(l, r) => {
                    let me = offset + l.size() + 1;
                    LTree::Node(
                        Box::new(rec(l, offset, labels)),
                        labels[me - 1],
                        Box::new(rec(r, me, labels)),
                    )
                }
            }
        }
        rec(&self.shape, 0, &self.labels)
    }

    fn from_ltree(t: &LTree) -> GraftingTree {
        fn rec(t: &LTree, labels: &mut Vec<u32>) -> BinaryTree {
            match t {
                LTree::Leaf => BinaryTree::Leaf,
                LTree::Node(l, lab, r) => {
                    let ls = rec(l, labels);
                    labels.push(*lab);
                    let rs = rec(r, labels);
                    node(ls, rs)
                }
            }
        }
        let mut labels = Vec::new();
        let shape = rec(t, &mut labels);
        GraftingTree { shape, labels }
    }

    /// Reverses the contents of every left branch, carrying labels and
    /// right subtrees along; exchanges the descent and rise vectors.
    pub fn left_branch(&self) -> GraftingTree {
        fn phi(t: &LTree) -> LTree {
            match t {
                LTree::Leaf => LTree::Leaf,
                LTree::Node(..) => {
                    // collect the left branch from the root
                    let mut contents: Vec<(u32, LTree)> = Vec::new();
                    let mut cur = t;
                    while let LTree::Node(l, lab, r) = cur {
                        contents.push((*lab, phi(r)));
                        cur = l;
                    }
                    // rebuild with the contents reversed along the branch
                    let mut result = LTree::Leaf;
                    for (lab, right) in contents {
                        result = LTree::Node(Box::new(result), lab, Box::new(right));
                    }
                    // the fold above rebuilds bottom-up, so the first content
                    // (the old root) ends at the bottom: that is the reversal
                    result
                }
            }
        }
        GraftingTree::from_ltree(&phi(&self.to_ltree()))
    }

    /// The expand operation: multiplies labels by m, shifting the labels of
    /// nodes whose in-order index is not divisible by m.
    pub fn expand(&self, m: usize) -> Result<GraftingTree, IntervalError> {
        let m32 = m as u32;
        let mut labels = Vec::with_capacity(self.labels.len());
        for (idx0, &l) in self.labels.iter().enumerate() {
            let i = idx0 + 1;
            if i % m == 0 {
                labels.push(m32 * l);
            } else {
                if l == 0 {
                    return Err(IntervalError::NotMInterval);
                }
                labels.push(m32 * (l - 1));
            }
        }
        GraftingTree::new(self.shape.clone(), labels)
    }

    /// Inverse of expand; requires m-divisible contact and rise vectors.
    pub fn contract(&self, m: usize) -> Result<GraftingTree, IntervalError> {
        let m32 = m as u32;
        if self.contact_vector().iter().any(|&c| c % m32 != 0) {
            return Err(IntervalError::NotMDivisible);
        }
        let rises = self.to_interval()?.rise_vector();
        if rises.iter().any(|&c| c % m32 != 0) {
            return Err(IntervalError::NotMDivisible);
        }
        let mut labels = Vec::with_capacity(self.labels.len());
        for (idx0, &l) in self.labels.iter().enumerate() {
            let i = idx0 + 1;
            if l % m32 != 0 {
                return Err(IntervalError::NotMDivisible);
            }
            if i % m == 0 {
                labels.push(l / m32);
            } else {
                labels.push(l / m32 + 1);
            }
        }
        GraftingTree::new(self.shape.clone(), labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tamari::leaf;

    fn ip(n: usize, inc: &[(u8, u8)], dec: &[(u8, u8)]) -> IntervalPoset {
        IntervalPoset::new(n, inc.iter().copied(), dec.iter().copied()).unwrap()
    }

    /// The running example of size 8 used by the statistics figures:
    /// blue 1-2, 2-4, 3-4, 6-7 and red 3-2, 8-7, 5-4, 6-4.
    fn fig_running_example() -> IntervalPoset {
        ip(
            8,
            &[(1, 2), (2, 4), (3, 4), (6, 7)],
            &[(2, 3), (7, 8), (4, 5), (4, 6)],
        )
    }

    /// Lower tree of the size-10 construction figure.
    fn fig10_lower() -> BinaryTree {
        let sub2 = node(node(leaf(), leaf()), node(node(leaf(), leaf()), leaf()));
        let sub7 = node(node(leaf(), leaf()), leaf());
        let sub8 = node(sub7, node(leaf(), leaf()));
        let sub10 = node(sub8, leaf());
        node(sub2, sub10)
    }

    /// Upper tree of the size-10 construction figure.
    fn fig10_upper() -> BinaryTree {
        let sub2 = node(leaf(), node(node(leaf(), leaf()), leaf()));
        let sub8 = node(leaf(), node(leaf(), leaf()));
        let sub10 = node(sub8, leaf());
        let sub7 = node(node(leaf(), leaf()), sub10);
        let sub5 = node(sub2, sub7);
        node(leaf(), sub5)
    }

    #[test]
    fn incompatible_pair_errors() {
        let t = node(node(leaf(), node(leaf(), leaf())), leaf());
        let q = node(node(leaf(), leaf()), node(leaf(), leaf()));
        assert_eq!(
            IntervalPoset::from_tree_pair(&t, &q),
            Err(IntervalError::IncompatibleTrees)
        );
    }

    #[test]
    fn min_max_pair_gives_antichain() {
        for n in 1..=5 {
            let p = IntervalPoset::from_tree_pair(
                &BinaryTree::left_comb(n),
                &BinaryTree::right_comb(n),
            )
            .unwrap();
            assert_eq!(p, IntervalPoset::antichain(n));
        }
    }

    #[test]
    fn successful_pairs_size4() {
        assert_eq!(count_intervals(4), 68);
    }

    #[test]
    fn is_interval_poset_raw_checks() {
        let inc: BTreeSet<(u8, u8)> = [(1, 3)].into_iter().collect();
        assert!(!is_interval_poset(3, &inc, &BTreeSet::new()));
        assert!(is_interval_poset(3, &BTreeSet::new(), &BTreeSet::new()));
    }

    #[test]
    fn interval_poset_count_sequence() {
        assert_eq!(count_intervals(1), 1);
        assert_eq!(count_intervals(2), 3);
        assert_eq!(count_intervals(3), 13);
        assert_eq!(count_intervals(4), 68);
    }

    #[test]
    fn distinct_posets_per_pair() {
        for n in 1..=5 {
            let all = enumerate_interval_posets(n);
            let set: BTreeSet<&IntervalPoset> = all.iter().collect();
            assert_eq!(set.len(), all.len());
        }
    }

    #[test]
    fn tree_pair_round_trip() {
        for n in 1..=5 {
            let trees = enumerate_trees(n);
            for lower in &trees {
                for upper in &trees {
                    if let Ok(p) = IntervalPoset::from_tree_pair(lower, upper) {
                        assert_eq!(p.to_tree_pair(), (lower.clone(), upper.clone()));
                    }
                }
            }
        }
    }

    #[test]
    fn figure10_linear_extension_interval() {
        let p = IntervalPoset::from_tree_pair(&fig10_lower(), &fig10_upper()).unwrap();
        let (min, max) = p.linear_extension_interval();
        assert_eq!(min.word(), &[1, 3, 4, 2, 6, 7, 9, 8, 10, 5]);
        assert_eq!(max.word(), &[9, 8, 10, 6, 7, 3, 4, 2, 5, 1]);
        assert_eq!(p.to_tree_pair(), (fig10_lower(), fig10_upper()));
    }

    #[test]
    fn antichain_extension_interval() {
        let p = IntervalPoset::antichain(3);
        let (min, max) = p.linear_extension_interval();
        assert_eq!(min, Permutation::identity(3));
        assert_eq!(max, Permutation::longest(3));
    }

    #[test]
    fn linear_extensions_match_weak_interval() {
        for n in 1..=5 {
            for p in enumerate_interval_posets(n) {
                let exts = p.all_linear_extensions();
                let (min, max) = p.linear_extension_interval();
                let inside = crate::perm::permutations(n)
                    .into_iter()
                    .filter(|q| min.weak_le(q).unwrap() && q.weak_le(&max).unwrap())
                    .count();
                assert_eq!(exts.len(), inside);
            }
        }
    }

    #[test]
    fn formula_matches_enumeration() {
        for n in 1..=5 {
            assert!(interval_generating_check(n));
        }
    }

    #[test]
    fn functional_equation_prefix() {
        assert_eq!(
            interval_counts_from_functional_equation(6),
            vec![1, 1, 3, 13, 68, 399, 2530]
        );
    }

    #[test]
    fn composition_figure() {
        // the running example is compose(I, J, 2) for its restrictions
        let i3 = ip(3, &[(1, 2)], &[(2, 3)]);
        let j4 = ip(4, &[(2, 3)], &[(3, 4)]);
        let composed = IntervalPoset::compose(&i3, &j4, 2).unwrap();
        assert_eq!(composed, fig_running_example());
        assert_eq!(IntervalPoset::compose_all(&i3, &j4).len(), 4);
        assert_eq!(
            IntervalPoset::compose(&i3, &j4, 4),
            Err(IntervalError::AttachmentOutOfRange { r: 4, contacts: 3 })
        );
        let single = IntervalPoset::compose(
            &IntervalPoset::antichain(0),
            &IntervalPoset::antichain(0),
            0,
        )
        .unwrap();
        assert_eq!(single, IntervalPoset::singleton());
    }

    #[test]
    fn composition_reproduces_counts() {
        // structural induction: intervals of size n are triples (I, J, r)
        for n in 1..=6 {
            let mut by_size: Vec<Vec<IntervalPoset>> = vec![Vec::new(); n];
            for k in 0..n {
                by_size[k] = if k == 0 {
                    vec![IntervalPoset::antichain(0)]
                } else {
                    enumerate_interval_posets(k)
                };
            }
            let mut built = BTreeSet::new();
            for k in 0..n {
                for i in &by_size[k] {
                    for j in &by_size[n - 1 - k] {
                        for p in IntervalPoset::compose_all(i, j) {
                            assert!(built.insert(p), "composition not injective");
                        }
                    }
                }
            }
            assert_eq!(built.len(), count_intervals(n));
        }
    }

    #[test]
    fn decompose_inverts_compose() {
        for n in 1..=5 {
            for p in enumerate_interval_posets(n) {
                let (m, i, j, r) = p.decompose().unwrap();
                let rebuilt = IntervalPoset::compose(&i, &j, r).unwrap();
                assert_eq!(rebuilt, p);
                assert_eq!(i.n() + j.n() + 1, n);
                let _ = m;
            }
        }
    }

    #[test]
    fn bt_polynomial_examples() {
        assert_eq!(bt_polynomial(&leaf()), UniPoly::one());
        for n in 1..=6 {
            let total: i64 = enumerate_trees(n)
                .iter()
                .map(|t| bt_polynomial(t).eval_one())
                .sum();
            assert_eq!(total as u128, interval_count_formula(n));
            let max_tree = BinaryTree::right_comb(n);
            let catalan = enumerate_trees(n).len() as i64;
            assert_eq!(bt_polynomial(&max_tree).eval_one(), catalan);
        }
    }

    #[test]
    fn bt_polynomial_counts_trees_below() {
        for n in 1..=5 {
            let trees = enumerate_trees(n);
            for t in &trees {
                let below = trees.iter().filter(|q| q.tamari_le(t).unwrap()).count();
                assert_eq!(bt_polynomial(t).eval_one(), below as i64);
            }
        }
    }

    #[test]
    fn grafting_round_trip() {
        for n in 1..=5 {
            for p in enumerate_interval_posets(n) {
                let g = p.to_grafting();
                g.validate().unwrap();
                assert_eq!(g.to_interval().unwrap(), p);
            }
        }
    }

    #[test]
    fn grafting_labels_count_dec_children() {
        for p in enumerate_interval_posets(4) {
            let g = p.to_grafting();
            for v in 1..=4u8 {
                assert_eq!(
                    g.labels()[v as usize - 1] as usize,
                    p.dec_children(v).len(),
                    "node {v} of {p:?}"
                );
            }
        }
    }

    #[test]
    fn grafting_running_example() {
        let g = fig_running_example().to_grafting();
        assert_eq!(g.labels(), &[0, 1, 0, 2, 0, 0, 1, 0]);
    }

    #[test]
    fn grafting_zero_labels_iff_lower_is_minimum() {
        for n in 1..=5 {
            for p in enumerate_interval_posets(n) {
                let g = p.to_grafting();
                let (lower, _) = p.to_tree_pair();
                assert_eq!(
                    g.labels().iter().all(|&l| l == 0),
                    lower == BinaryTree::left_comb(n)
                );
            }
        }
    }

    #[test]
    fn grafting_maximal_labels_iff_singleton_interval() {
        for n in 1..=5 {
            for p in enumerate_interval_posets(n) {
                let g = p.to_grafting();
                let maximal = g.deficits().iter().all(|&d| d == 0);
                let (lower, upper) = p.to_tree_pair();
                assert_eq!(maximal, lower == upper);
            }
        }
    }

    #[test]
    fn contact_vector_running_example() {
        let p = fig_running_example();
        assert_eq!(p.contact_vector(), vec![4, 0, 1, 0, 2, 0, 0, 1]);
        assert_eq!(p.rise_vector(), vec![1, 2, 0, 3, 2, 0, 0, 0]);
    }

    #[test]
    fn contact_vector_matches_lower_path() {
        for n in 1..=6 {
            for p in enumerate_interval_posets(n) {
                assert_eq!(p.contact_vector(), p.contact_vector_from_lower_path());
            }
        }
    }

    #[test]
    fn tamari_inversions_figure() {
        let p = fig_running_example();
        assert_eq!(p.tamari_inversions(), vec![(4, 7), (5, 6), (5, 7)]);
        assert_eq!(p.distance(), 3);
    }

    #[test]
    fn singleton_interval_distance_zero() {
        for t in enumerate_trees(4) {
            let p = IntervalPoset::from_tree_pair(&t, &t).unwrap();
            assert!(p.tamari_inversions().is_empty());
            assert_eq!(p.distance(), 0);
        }
    }

    #[test]
    fn distance_equals_deficit_sum_and_longest_chain() {
        for n in 1..=5 {
            for p in enumerate_interval_posets(n) {
                let d = p.distance();
                assert_eq!(
                    d,
                    p.to_grafting().deficits().iter().sum::<u32>() as usize
                );
                // longest chain in the rotation graph between the ends
                let (lower, upper) = p.to_tree_pair();
                let mut best = std::collections::BTreeMap::new();
                best.insert(lower.clone(), 0usize);
                let mut queue = vec![lower];
                while let Some(t) = queue.pop() {
                    let cur = best[&t];
                    for c in t.tamari_covers() {
                        if c.tamari_le(&upper).unwrap() {
                            let e = best.entry(c.clone()).or_insert(0);
                            if cur + 1 >= *e {
                                *e = cur + 1;
                                queue.push(c);
                            }
                        }
                    }
                }
                assert_eq!(best.get(&upper), Some(&d));
            }
        }
    }

    #[test]
    fn complement_involution() {
        let p = fig_running_example();
        let q = p.complement();
        // contact vector of the image equals the reversed descent vector
        assert_eq!(q.descent_vector(), p.contact_vector());
        assert_eq!(q.contact_vector(), p.descent_vector());
        for n in 1..=5 {
            for p in enumerate_interval_posets(n) {
                let c = p.complement();
                assert_eq!(c.complement(), p);
                assert_eq!(c.distance(), p.distance());
            }
        }
    }

    #[test]
    fn complement_figure_vectors() {
        // the size-8 interval drawn for the complement involution:
        // blue 1-6, 2-6, 3-5, 4-5, 5-6, 6-8, 7-8 and red 7-6, 4-3, 3-1, 2-1
        let p = ip(
            8,
            &[(1, 6), (2, 6), (3, 5), (4, 5), (5, 6), (6, 8), (7, 8)],
            &[(6, 7), (3, 4), (1, 3), (1, 2)],
        );
        assert_eq!(p.contact_vector(), vec![4, 2, 0, 1, 0, 0, 1, 0]);
        assert_eq!(p.descent_vector(), vec![1, 2, 0, 3, 2, 0, 0, 0]);
        let q = p.complement();
        assert_eq!(q.contact_vector(), vec![1, 2, 0, 3, 2, 0, 0, 0]);
        assert_eq!(q.descent_vector(), vec![4, 2, 0, 1, 0, 0, 1, 0]);
    }

    #[test]
    fn left_branch_involution_figure() {
        let p = fig_running_example();
        let q = p.left_branch();
        assert_eq!(q.to_grafting().labels(), &[2, 0, 1, 0, 0, 1, 0, 0]);
        assert_eq!(q.contact_vector(), vec![4, 2, 0, 1, 0, 0, 1, 0]);
        assert_eq!(q.rise_vector(), vec![4, 0, 1, 0, 0, 2, 0, 1]);
        assert_eq!(q.descent_vector(), p.rise_vector());
    }

    #[test]
    fn left_branch_involution_properties() {
        for n in 1..=5 {
            for p in enumerate_interval_posets(n) {
                let q = p.left_branch();
                assert_eq!(q.left_branch(), p);
                assert_eq!(q.distance(), p.distance());
                assert_eq!(q.contact_vector()[0], p.contact_vector()[0]);
                let mut pc = p.contact_vector();
                let mut qc = q.contact_vector();
                pc.sort_unstable();
                qc.sort_unstable();
                assert_eq!(pc, qc);
                assert_eq!(q.rise_vector(), p.descent_vector());
                assert_eq!(q.descent_vector(), p.rise_vector());
            }
        }
    }

    #[test]
    fn rise_contact_figure() {
        let p = fig_running_example();
        let j = p.rise_contact();
        assert_eq!(j.contact_vector(), vec![1, 2, 3, 2, 0, 0, 0, 0]);
        assert_eq!(j.rise_vector(), vec![4, 2, 0, 1, 0, 0, 1, 0]);
    }

    #[test]
    fn rise_contact_properties() {
        for n in 1..=5 {
            for p in enumerate_interval_posets(n) {
                let b = p.rise_contact();
                assert_eq!(b.rise_contact(), p);
                assert_eq!(b.distance(), p.distance());
                assert_eq!(p.contact_vector()[0], b.rise_vector()[0]);
                assert_eq!(p.rise_vector()[0], b.contact_vector()[0]);
                let mut pc = p.contact_vector();
                let mut br = b.rise_vector();
                pc.sort_unstable();
                br.sort_unstable();
                assert_eq!(pc, br);
                let mut pr = p.rise_vector();
                let mut bc = b.contact_vector();
                pr.sort_unstable();
                bc.sort_unstable();
                assert_eq!(pr, bc);
            }
        }
    }

    #[test]
    fn m_interval_examples() {
        for p in enumerate_interval_posets(3) {
            assert!(p.is_m_interval(1).unwrap());
        }
        assert_eq!(count_m_intervals(2, 2), 6);
        assert_eq!(m_interval_count_formula(2, 2), 6);
    }

    #[test]
    fn m_interval_size22_figure() {
        // the displayed size-22 interval for m = 2, n = 11: every even
        // value is below its odd predecessor
        let dec = [
            (21, 22),
            (19, 21),
            (19, 20),
            (17, 18),
            (15, 17),
            (15, 16),
            (9, 15),
            (13, 14),
            (9, 13),
            (11, 12),
            (10, 11),
            (9, 10),
            (7, 8),
            (5, 6),
            (3, 5),
            (3, 4),
            (1, 2),
        ];
        let inc = [
            (1, 3),
            (2, 3),
            (4, 7),
            (5, 7),
            (6, 7),
            (7, 9),
            (8, 9),
            (10, 15),
            (11, 13),
            (12, 13),
            (13, 15),
            (14, 15),
            (15, 19),
            (16, 17),
            (17, 19),
            (18, 19),
        ];
        let p = ip(22, &inc, &dec);
        assert!(p.is_m_interval(2).unwrap());
        assert!(!p.is_m_interval(11).unwrap());
        // the m-grafting characterization: inner labels are positive
        let g = p.to_grafting();
        for (idx0, &l) in g.labels().iter().enumerate() {
            if (idx0 + 1) % 2 != 0 {
                assert!(l >= 1, "label at node {}", idx0 + 1);
            }
        }
    }

    #[test]
    fn expand_contract_round_trip() {
        let m = 2;
        for n in 1..=3 {
            for p in enumerate_interval_posets(n * m) {
                if !p.is_m_interval(m).unwrap() {
                    continue;
                }
                let g = p.to_grafting();
                let e = g.expand(m).unwrap();
                // image has m-divisible contact and rise vectors
                assert!(e.contact_vector().iter().all(|&c| c % m as u32 == 0));
                let ei = e.to_interval().unwrap();
                assert!(ei.rise_vector().iter().all(|&c| c % m as u32 == 0));
                assert_eq!(e.contract(m).unwrap(), g);
            }
        }
    }

    #[test]
    fn expand_is_bijective_onto_divisible_vectors() {
        let m = 2;
        let n = 2;
        let mut images = BTreeSet::new();
        for p in enumerate_interval_posets(n * m) {
            if p.is_m_interval(m).unwrap() {
                images.insert(p.to_grafting().expand(m).unwrap().to_interval().unwrap());
            }
        }
        let divisible: BTreeSet<IntervalPoset> = enumerate_interval_posets(n * m)
            .into_iter()
            .filter(|p| {
                p.contact_vector().iter().all(|&c| c % m as u32 == 0)
                    && p.rise_vector().iter().all(|&c| c % m as u32 == 0)
            })
            .collect();
        assert_eq!(images, divisible);
    }

    #[test]
    fn m_rise_contact_involution() {
        for (m, max_n) in [(2, 3), (3, 2)] {
            for n in 1..=max_n {
                for p in enumerate_interval_posets(n * m) {
                    if !p.is_m_interval(m).unwrap() {
                        continue;
                    }
                    let b = p.m_rise_contact(m).unwrap();
                    assert!(b.is_m_interval(m).unwrap());
                    assert_eq!(b.m_rise_contact(m).unwrap(), p);
                    let mut mc = p.m_contact_vector(m).unwrap();
                    let mut mr = b.m_rise_vector(m).unwrap();
                    mc.sort_unstable();
                    mr.sort_unstable();
                    assert_eq!(mc, mr);
                }
            }
        }
    }

    #[test]
    fn beta_1_is_beta() {
        for p in enumerate_interval_posets(3) {
            assert_eq!(p.m_rise_contact(1).unwrap(), p.rise_contact());
        }
    }

    #[test]
    fn distance_polynomial_from_chains() {
        // q^distance summed by Tamari inversions equals the longest-chain
        // computation; covered per interval by the distance test above, so
        // just pin the small polynomials here
        let p3 = distance_polynomial(3);
        assert_eq!(p3.eval_ones(), 13);
    }

    #[test]
    fn json_shape() {
        let p = ip(3, &[(1, 3), (2, 3)], &[]);
        assert_eq!(p.to_json(), "{\"n\":3,\"inc\":[[1,3],[2,3]],\"dec\":[]}");
    }
}
