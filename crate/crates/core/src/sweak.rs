//! The s-weak order on s-decreasing trees, with tree-inversion
//! multisets, tree-ascents, the s-Tamari sublattice and pure intervals.
//!
//! For a sequence s of nonnegative integers, node i of an s-decreasing
//! tree has s(i)+1 ordered children and labels decrease away from the
//! root. The multiset of tree-inversions card(b, a) records where each
//! smaller label sits relative to each larger one; the s-weak order is
//! entrywise comparison of these multisets.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SWeakError {
    SequenceMismatch,
    InvalidMultiset(String),
    InvalidAscent(u8, u8),
    Parse(String),
}

impl fmt::Display for SWeakError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SWeakError::SequenceMismatch => write!(f, "trees have different s sequences"),
            SWeakError::InvalidMultiset(s) => write!(f, "invalid inversion multiset: {s}"),
            SWeakError::InvalidAscent(a, c) => write!(f, "({a},{c}) is not a tree-ascent"),
            SWeakError::Parse(s) => write!(f, "cannot parse: {s}"),
        }
    }
}

impl std::error::Error for SWeakError {}

/// The arity sequence: node i has s(i)+1 children.
pub type SSequence = Vec<u32>;

/// An s-decreasing tree stored as child tables: `children[i-1]` lists the
/// s(i)+1 child slots of node i, each a smaller label or a leaf.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SDecreasingTree {
    s: SSequence,
    children: Vec<Vec<Option<u8>>>,
}

impl fmt::Debug for SDecreasingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SDecreasingTree({})", self.to_string_nested())
    }
}

impl SDecreasingTree {
    pub fn new(s: SSequence, children: Vec<Vec<Option<u8>>>) -> Result<Self, SWeakError> {
        let n = s.len();
        if children.len() != n {
            return Err(SWeakError::Parse("child table length".into()));
        }
        for (i, slots) in children.iter().enumerate() {
            if slots.len() != s[i] as usize + 1 {
                return Err(SWeakError::Parse(format!("arity of node {}", i + 1)));
            }
            for c in slots.iter().flatten() {
                if *c as usize > i || *c == 0 {
                    return Err(SWeakError::Parse(format!(
                        "child {} of node {} does not decrease",
                        c,
                        i + 1
                    )));
                }
            }
        }
        let t = SDecreasingTree { s, children };
        // every non-root node appears in exactly one slot
        let mut parent = vec![0u8; n + 1];
        for i in 1..=n {
            for c in t.children[i - 1].iter().flatten() {
                if parent[*c as usize] != 0 {
                    return Err(SWeakError::Parse(format!("node {c} has two parents")));
                }
                parent[*c as usize] = i as u8;
            }
        }
        if n > 0 {
            for v in 1..n {
                if parent[v] == 0 {
                    return Err(SWeakError::Parse(format!("node {v} unattached")));
                }
            }
            if parent[n] != 0 {
                return Err(SWeakError::Parse("root must be the largest label".into()));
            }
        }
        Ok(t)
    }

    pub fn s(&self) -> &SSequence {
        &self.s
    }

    pub fn n(&self) -> usize {
        self.s.len()
    }

    /// Minimum of the s-weak order: every node in its parent's first slot.
    pub fn minimum(s: &SSequence) -> Self {
        let n = s.len();
        let mut children: Vec<Vec<Option<u8>>> =
            (0..n).map(|i| vec![None; s[i] as usize + 1]).collect();
        for v in 1..n {
            children[v][0] = Some(v as u8);
        }
        SDecreasingTree {
            s: s.clone(),
            children,
        }
    }

    /// Maximum: every node in its parent's last slot.
    pub fn maximum(s: &SSequence) -> Self {
        let n = s.len();
        let mut children: Vec<Vec<Option<u8>>> =
            (0..n).map(|i| vec![None; s[i] as usize + 1]).collect();
        for v in 1..n {
            let last = s[v] as usize;
            children[v][last] = Some(v as u8);
        }
        SDecreasingTree {
            s: s.clone(),
            children,
        }
    }

    fn parent_table(&self) -> Vec<(u8, usize)> {
        // (parent, child slot) per node; root has parent 0
        let n = self.n();
        let mut table = vec![(0u8, 0usize); n + 1];
        for i in 1..=n {
            for (k, c) in self.children[i - 1].iter().enumerate() {
                if let Some(c) = c {
                    table[*c as usize] = (i as u8, k);
                }
            }
        }
        table
    }

    /// Tree-inversion cardinalities: card(b, a) is the child index of b's
    /// subtree containing a, or 0 / s(b) when a lies left / right of b.
    pub fn tree_inversions(&self) -> InversionMultiset {
        let n = self.n();
        let parents = self.parent_table();
        // root path of every node as (node, slot) pairs from the root down
        let mut paths: Vec<Vec<(u8, usize)>> = vec![Vec::new(); n + 1];
        for v in 1..=n {
            let mut path = Vec::new();
            let mut x = v as u8;
            while parents[x as usize].0 != 0 {
                let (p, k) = parents[x as usize];
                path.push((p, k));
                x = p;
            }
            path.reverse();
            paths[v] = path;
        }
        let mut card = BTreeMap::new();
        for a in 1..n as u8 {
            for b in (a + 1)..=n as u8 {
                // if b is on a's root path, a is in one of b's subtrees
                let from_b = paths[a as usize].iter().find(|(p, _)| *p == b);
                let value = if let Some((_, k)) = from_b {
                    *k as u32
                } else {
                    // compare slots at the lowest common ancestor
                    let pa = &paths[a as usize];
                    let pb = &paths[b as usize];
                    let mut i = 0;
                    while i < pa.len() && i < pb.len() && pa[i].0 == pb[i].0 {
                        if pa[i].1 != pb[i].1 {
                            break;
                        }
                        i += 1;
                    }
                    let (sa, sb) = (pa[i].1, pb[i].1);
                    if sa < sb {
                        0
                    } else {
                        self.s[b as usize - 1]
                    }
                };
                card.insert((b, a), value);
            }
        }
        InversionMultiset {
            s: self.s.clone(),
            card,
        }
    }

    pub fn s_weak_le(&self, other: &SDecreasingTree) -> Result<bool, SWeakError> {
        if self.s != other.s {
            return Err(SWeakError::SequenceMismatch);
        }
        let a = self.tree_inversions();
        let b = other.tree_inversions();
        Ok(a.card.iter().all(|(k, v)| v <= &b.card[k]))
    }

    pub fn s_join(&self, other: &SDecreasingTree) -> Result<SDecreasingTree, SWeakError> {
        if self.s != other.s {
            return Err(SWeakError::SequenceMismatch);
        }
        let a = self.tree_inversions();
        let b = other.tree_inversions();
        let mut card = a.card.clone();
        for (k, v) in &b.card {
            let e = card.get_mut(k).expect("same key set");
            *e = (*e).max(*v);
        }
        let closed = InversionMultiset {
            s: self.s.clone(),
            card,
        }
        .closure();
        closed.to_tree()
    }

    pub fn s_meet(&self, other: &SDecreasingTree) -> Result<SDecreasingTree, SWeakError> {
        if self.s != other.s {
            return Err(SWeakError::SequenceMismatch);
        }
        // complementation is an anti-automorphism of the s-weak order
        let ac = self.tree_inversions().complement().to_tree()?;
        let bc = other.tree_inversions().complement().to_tree()?;
        let j = ac.s_join(&bc)?;
        j.tree_inversions().complement().to_tree()
    }

    /// Tree-ascents (a, c): c is an ancestor of a, a sits in the last
    /// subtree of every node strictly between them, a is not yet in the
    /// last subtree of c, and a has no strict right child.
    pub fn tree_ascents(&self) -> Vec<(u8, u8)> {
        let n = self.n();
        let parents = self.parent_table();
        let inv = self.tree_inversions();
        let mut out = Vec::new();
        for a in 1..=n as u8 {
            // strict right child: last slot occupied while s(a) > 0
            let sa = self.s[a as usize - 1] as usize;
            if sa > 0 && self.children[a as usize - 1][sa].is_some() {
                continue;
            }
            // walk up from a
            let mut b = parents[a as usize].0;
            loop {
                if b == 0 {
                    break;
                }
                if inv.card(b, a) < self.s[b as usize - 1] {
                    out.push((a, b));
                    break;
                }
                if inv.card(b, a) == self.s[b as usize - 1] {
                    b = parents[b as usize].0;
                } else {
                    break;
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Applies a tree-ascent: raises card(c, a) by one and rebuilds.
    pub fn apply_ascent(&self, a: u8, c: u8) -> Result<SDecreasingTree, SWeakError> {
        if !self.tree_ascents().contains(&(a, c)) {
            return Err(SWeakError::InvalidAscent(a, c));
        }
        let mut inv = self.tree_inversions();
        *inv.card.get_mut(&(c, a)).expect("pair in range") += 1;
        inv.closure().to_tree()
    }

    /// Covers in the s-weak order, one per tree-ascent.
    pub fn covers(&self) -> Vec<SDecreasingTree> {
        self.tree_ascents()
            .into_iter()
            .map(|(a, c)| self.apply_ascent(a, c).expect("ascent applies"))
            .collect()
    }

    /// s-Tamari trees: smaller labels may not be strictly righter than
    /// bigger ones anywhere.
    pub fn is_s_tamari(&self) -> bool {
        let inv = self.tree_inversions();
        let n = self.n() as u8;
        for a in 1..=n {
            for b in (a + 1)..=n {
                for c in (b + 1)..=n {
                    if inv.card(c, a) > inv.card(c, b) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Nested-list rendering, children in slot order.
    pub fn to_string_nested(&self) -> String {
        fn rec(t: &SDecreasingTree, v: u8, out: &mut String) {
            out.push_str(&v.to_string());
            out.push('[');
            for (k, c) in t.children[v as usize - 1].iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                match c {
                    Some(c) => rec(t, *c, out),
                    None => out.push('-'),
                }
            }
            out.push(']');
        }
        if self.n() == 0 {
            return "[]".to_string();
        }
        let mut out = String::new();
        rec(self, self.n() as u8, &mut out);
        out
    }
}

/// The multiset of tree-inversions: card(b, a) in 0..=s(b) per pair.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct InversionMultiset {
    s: SSequence,
    card: BTreeMap<(u8, u8), u32>,
}

impl InversionMultiset {
    pub fn new(s: SSequence, card: BTreeMap<(u8, u8), u32>) -> Result<Self, SWeakError> {
        let n = s.len() as u8;
        for b in 2..=n {
            for a in 1..b {
                match card.get(&(b, a)) {
                    Some(v) if *v <= s[b as usize - 1] => {}
                    Some(v) => {
                        return Err(SWeakError::InvalidMultiset(format!(
                            "card({b},{a}) = {v} exceeds s({b})"
                        )))
                    }
                    None => {
                        return Err(SWeakError::InvalidMultiset(format!(
                            "card({b},{a}) missing"
                        )))
                    }
                }
            }
        }
        Ok(InversionMultiset { s, card })
    }

    pub fn card(&self, b: u8, a: u8) -> u32 {
        self.card[&(b, a)]
    }

    pub fn s(&self) -> &SSequence {
        &self.s
    }

    /// Transitivity: a positive card(b, a) forces card(c, a) >= card(c, b).
    pub fn is_transitive(&self) -> bool {
        let n = self.s.len() as u8;
        for a in 1..=n {
            for b in (a + 1)..=n {
                for c in (b + 1)..=n {
                    if self.card(b, a) > 0 && self.card(c, a) < self.card(c, b) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Planarity: card(c, a) = i forces card(b, a) = s(b) or card(c, b) >= i.
    pub fn is_planar(&self) -> bool {
        let n = self.s.len() as u8;
        for a in 1..=n {
            for b in (a + 1)..=n {
                for c in (b + 1)..=n {
                    let i = self.card(c, a);
                    if i > 0 && self.card(b, a) != self.s[b as usize - 1] && self.card(c, b) < i {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_valid(&self) -> bool {
        self.is_transitive() && self.is_planar()
    }

    /// Monotone repair to the smallest valid multiset above this one.
    pub fn closure(mut self) -> InversionMultiset {
        let n = self.s.len() as u8;
        loop {
            let mut changed = false;
            for a in 1..=n {
                for b in (a + 1)..=n {
                    for c in (b + 1)..=n {
                        if self.card(b, a) > 0 && self.card(c, a) < self.card(c, b) {
                            let v = self.card(c, b);
                            self.card.insert((c, a), v);
                            changed = true;
                        }
                        let i = self.card(c, a);
                        if i > 0
                            && self.card(b, a) != self.s[b as usize - 1]
                            && self.card(c, b) < i
                        {
                            self.card.insert((c, b), i);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return self;
            }
        }
    }

    /// Entrywise complement card'(b, a) = s(b) - card(b, a), reversing the
    /// order and exchanging transitivity with planarity.
    pub fn complement(&self) -> InversionMultiset {
        let card = self
            .card
            .iter()
            .map(|(&(b, a), &v)| ((b, a), self.s[b as usize - 1] - v))
            .collect();
        InversionMultiset {
            s: self.s.clone(),
            card,
        }
    }

    /// Rebuilds the tree; errors when the multiset is not valid.
    pub fn to_tree(&self) -> Result<SDecreasingTree, SWeakError> {
        if !self.is_valid() {
            return Err(SWeakError::InvalidMultiset(
                "not transitive and planar".into(),
            ));
        }
        let n = self.s.len();
        let mut children: Vec<Vec<Option<u8>>> = (0..n)
            .map(|i| vec![None; self.s[i] as usize + 1])
            .collect();
        // group the labels below each node recursively, starting from the
        // root n which sees every smaller label in one of its slots
        fn build(
            inv: &InversionMultiset,
            root: u8,
            members: &[u8],
            children: &mut Vec<Vec<Option<u8>>>,
        ) {
            let slots = inv.s[root as usize - 1] as usize + 1;
            let mut groups: Vec<Vec<u8>> = vec![Vec::new(); slots];
            for &a in members {
                groups[inv.card(root, a) as usize].push(a);
            }
            for (k, group) in groups.iter().enumerate() {
                if let Some(&sub) = group.iter().max() {
                    children[root as usize - 1][k] = Some(sub);
                    let rest: Vec<u8> = group.iter().copied().filter(|&x| x != sub).collect();
                    build(inv, sub, &rest, children);
                }
            }
        }
        if n > 0 {
            let members: Vec<u8> = (1..n as u8).collect();
            build(self, n as u8, &members, &mut children);
        }
        let tree = SDecreasingTree::new(self.s.clone(), children)?;
        if &tree.tree_inversions() != self {
            return Err(SWeakError::InvalidMultiset(
                "reconstruction mismatch".into(),
            ));
        }
        Ok(tree)
    }

    /// JSON object keyed by "b,a".
    pub fn to_json(&self) -> String {
        let items: Vec<String> = self
            .card
            .iter()
            .map(|((b, a), v)| format!("\"{b},{a}\":{v}"))
            .collect();
        format!("{{{}}}", items.join(","))
    }
}

/// All s-decreasing trees, by inserting labels n-1, .., 1 into free slots.
pub fn enumerate_trees(s: &SSequence) -> Vec<SDecreasingTree> {
    let n = s.len();
    if n == 0 {
        return vec![SDecreasingTree {
            s: s.clone(),
            children: Vec::new(),
        }];
    }
    let empty: Vec<Vec<Option<u8>>> = (0..n).map(|i| vec![None; s[i] as usize + 1]).collect();
    let mut out = Vec::new();
    let mut current = empty;
    fn rec(
        s: &SSequence,
        v: usize,
        current: &mut Vec<Vec<Option<u8>>>,
        out: &mut Vec<SDecreasingTree>,
    ) {
        if v == 0 {
            out.push(SDecreasingTree {
                s: s.clone(),
                children: current.clone(),
            });
            return;
        }
        // free slots of already-placed nodes, scanned root first
        for owner in (v + 1..=s.len()).rev() {
            let placed = owner == s.len()
                || current
                    .iter()
                    .any(|slots| slots.contains(&Some(owner as u8)));
            if !placed {
                continue;
            }
            for k in 0..current[owner - 1].len() {
                if current[owner - 1][k].is_none() {
                    current[owner - 1][k] = Some(v as u8);
                    rec(s, v - 1, current, out);
                    current[owner - 1][k] = None;
                }
            }
        }
    }
    rec(s, n - 1, &mut current, &mut out);
    out
}

/// The closed product formula for the number of s-decreasing trees.
pub fn count(s: &SSequence) -> u64 {
    let n = s.len();
    let mut total = 1u64;
    let mut suffix = 0u64;
    for j in (1..n).rev() {
        suffix += s[j] as u64;
        total *= 1 + suffix;
    }
    total
}

/// The s-Tamari sublattice as a sub-Hasse diagram: its elements and the
/// cover pairs among them, as indices into the element list.
pub fn s_tamari_lattice(s: &SSequence) -> (Vec<SDecreasingTree>, Vec<(usize, usize)>) {
    let elems: Vec<SDecreasingTree> = enumerate_trees(s)
        .into_iter()
        .filter(|t| t.is_s_tamari())
        .collect();
    let mut covers = Vec::new();
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            if i == j || !a.s_weak_le(b).expect("same s") {
                continue;
            }
            let direct = !elems.iter().enumerate().any(|(k, c)| {
                k != i
                    && k != j
                    && a.s_weak_le(c).expect("same s")
                    && c.s_weak_le(b).expect("same s")
            });
            if direct {
                covers.push((i, j));
            }
        }
    }
    (elems, covers)
}

/// The fixed path of the nu-Tamari lattice matching the s-Tamari trees:
/// the reversed sequence read as north steps followed by east runs.
pub fn nu_of_s(s: &SSequence) -> Vec<bool> {
    let mut nu = Vec::new();
    for &si in s.iter().rev() {
        nu.push(true);
        nu.extend(std::iter::repeat_n(false, si as usize));
    }
    nu
}

/// A pure interval: a tree with selected tree-ascents, spanning up to the
/// join of the corresponding covers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PureInterval {
    bottom: SDecreasingTree,
    top: SDecreasingTree,
    ascents: Vec<(u8, u8)>,
}

impl PureInterval {
    pub fn new(bottom: &SDecreasingTree, ascents: &[(u8, u8)]) -> Result<Self, SWeakError> {
        let available = bottom.tree_ascents();
        for a in ascents {
            if !available.contains(a) {
                return Err(SWeakError::InvalidAscent(a.0, a.1));
            }
        }
        let mut top = bottom.clone();
        for &(a, c) in ascents {
            let cover = bottom.apply_ascent(a, c)?;
            top = top.s_join(&cover)?;
        }
        Ok(PureInterval {
            bottom: bottom.clone(),
            top,
            ascents: ascents.to_vec(),
        })
    }

    pub fn bottom(&self) -> &SDecreasingTree {
        &self.bottom
    }

    pub fn top(&self) -> &SDecreasingTree {
        &self.top
    }

    pub fn dimension(&self) -> usize {
        self.ascents.len()
    }

    /// All trees inside the interval, from the full enumeration.
    pub fn elements(&self) -> Vec<SDecreasingTree> {
        enumerate_trees(self.bottom.s())
            .into_iter()
            .filter(|t| {
                self.bottom.s_weak_le(t).expect("same s")
                    && t.s_weak_le(&self.top).expect("same s")
            })
            .collect()
    }

    /// Intersection, when nonempty, expressed again as a pure interval.
    pub fn intersect(&self, other: &PureInterval) -> Result<Option<PureInterval>, SWeakError> {
        if self.bottom.s() != other.bottom.s() {
            return Err(SWeakError::SequenceMismatch);
        }
        let bottom = self.bottom.s_join(&other.bottom)?;
        let top = self.top.s_meet(&other.top)?;
        if !bottom.s_weak_le(&top)? {
            return Ok(None);
        }
        // search the selected-ascent set realizing [bottom, top]
        let available = bottom.tree_ascents();
        let k = available.len();
        for mask in 0..(1u32 << k) {
            let chosen: Vec<(u8, u8)> = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| available[i])
                .collect();
            let candidate = PureInterval::new(&bottom, &chosen)?;
            if candidate.top == top {
                return Ok(Some(candidate));
            }
        }
        Err(SWeakError::InvalidMultiset(
            "intersection is not pure".into(),
        ))
    }
}

/// All pure intervals over all trees and ascent subsets.
pub fn enumerate_pure_intervals(s: &SSequence) -> Vec<PureInterval> {
    let mut out = Vec::new();
    for t in enumerate_trees(s) {
        let ascents = t.tree_ascents();
        let k = ascents.len();
        for mask in 0..(1u32 << k) {
            let chosen: Vec<(u8, u8)> = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| ascents[i])
                .collect();
            out.push(PureInterval::new(&t, &chosen).expect("valid ascents"));
        }
    }
    out
}
