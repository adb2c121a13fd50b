//! The weak order on integer binary relations and on integer posets.
//!
//! A relation on 1..=n is split into increasing pairs (a R b with a < b)
//! and decreasing pairs (b R a with a < b); reflexivity is implicit. The
//! weak order compares by decreasing-part inclusion and increasing-part
//! containment, which makes the relations a boolean lattice. Posets are
//! the antisymmetric transitive relations; their meet needs a repair
//! step, the transitive decreasing deletion.

use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetError {
    SizeMismatch(usize, usize),
    PairOutOfRange(u8, u8),
    NotAPoset,
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::SizeMismatch(a, b) => write!(f, "size mismatch: {a} vs {b}"),
            PosetError::PairOutOfRange(a, b) => write!(f, "pair ({a},{b}) out of range"),
            PosetError::NotAPoset => write!(f, "relation is not a poset"),
        }
    }
}

impl std::error::Error for PosetError {}

/// A reflexive binary relation on 1..=n split by orientation. Both sets
/// hold pairs (a, b) with a < b: `inc` means a R b, `dec` means b R a.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntegerRelation {
    n: usize,
    inc: BTreeSet<(u8, u8)>,
    dec: BTreeSet<(u8, u8)>,
}

impl fmt::Debug for IntegerRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerRelation({})", self.to_json())
    }
}

impl IntegerRelation {
    pub fn new(
        n: usize,
        inc: impl IntoIterator<Item = (u8, u8)>,
        dec: impl IntoIterator<Item = (u8, u8)>,
    ) -> Result<Self, PosetError> {
        let inc: BTreeSet<(u8, u8)> = inc.into_iter().collect();
        let dec: BTreeSet<(u8, u8)> = dec.into_iter().collect();
        for &(a, b) in inc.iter().chain(dec.iter()) {
            if a == 0 || a >= b || b as usize > n {
                return Err(PosetError::PairOutOfRange(a, b));
            }
        }
        Ok(IntegerRelation { n, inc, dec })
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

    /// x R y, excluding the implicit reflexive pairs.
    pub fn related(&self, x: u8, y: u8) -> bool {
        if x < y {
            self.inc.contains(&(x, y))
        } else if y < x {
            self.dec.contains(&(y, x))
        } else {
            false
        }
    }

    /// The global minimum of the weak order: all increasing relations.
    pub fn weak_minimum(n: usize) -> Self {
        let mut inc = BTreeSet::new();
        for a in 1..=n as u8 {
            for b in (a + 1)..=n as u8 {
                inc.insert((a, b));
            }
        }
        IntegerRelation {
            n,
            inc,
            dec: BTreeSet::new(),
        }
    }

    /// Dec(R) included in Dec(S) and Inc(S) included in Inc(R).
    pub fn weak_le(&self, other: &IntegerRelation) -> Result<bool, PosetError> {
        if self.n != other.n {
            return Err(PosetError::SizeMismatch(self.n, other.n));
        }
        Ok(self.dec.is_subset(&other.dec) && other.inc.is_subset(&self.inc))
    }

    /// Meet: union of increasing parts, intersection of decreasing parts.
    pub fn meet(&self, other: &IntegerRelation) -> Result<IntegerRelation, PosetError> {
        if self.n != other.n {
            return Err(PosetError::SizeMismatch(self.n, other.n));
        }
        Ok(IntegerRelation {
            n: self.n,
            inc: self.inc.union(&other.inc).copied().collect(),
            dec: self.dec.intersection(&other.dec).copied().collect(),
        })
    }

    /// Join: intersection of increasing parts, union of decreasing parts.
    pub fn join(&self, other: &IntegerRelation) -> Result<IntegerRelation, PosetError> {
        if self.n != other.n {
            return Err(PosetError::SizeMismatch(self.n, other.n));
        }
        Ok(IntegerRelation {
            n: self.n,
            inc: self.inc.intersection(&other.inc).copied().collect(),
            dec: self.dec.union(&other.dec).copied().collect(),
        })
    }

    /// Antisymmetry holds by the disjoint namespaces, so a relation is a
    /// poset exactly when its combined relation is transitive.
    pub fn is_poset(&self) -> bool {
        let n = self.n as u8;
        for x in 1..=n {
            for y in 1..=n {
                if x == y || !self.related(x, y) {
                    continue;
                }
                for z in 1..=n {
                    if z != x && z != y && self.related(y, z) && !self.related(x, z) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> String {
        let inc: Vec<String> = self.inc.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
        let dec: Vec<String> = self.dec.iter().map(|(a, b)| format!("[{b},{a}]")).collect();
        format!(
            "{{\"n\":{},\"inc\":[{}],\"dec\":[{}]}}",
            self.n,
            inc.join(","),
            dec.join(",")
        )
    }
}

/// An integer poset: an antisymmetric transitive integer relation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntegerPoset {
    rel: IntegerRelation,
}

impl fmt::Debug for IntegerPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerPoset({})", self.rel.to_json())
    }
}

impl IntegerPoset {
    pub fn new(rel: IntegerRelation) -> Result<Self, PosetError> {
        if !rel.is_poset() {
            return Err(PosetError::NotAPoset);
        }
        Ok(IntegerPoset { rel })
    }

    pub fn relation(&self) -> &IntegerRelation {
        &self.rel
    }

    pub fn n(&self) -> usize {
        self.rel.n
    }

    pub fn precedes(&self, x: u8, y: u8) -> bool {
        self.rel.related(x, y)
    }

    pub fn weak_le(&self, other: &IntegerPoset) -> Result<bool, PosetError> {
        self.rel.weak_le(&other.rel)
    }

    /// Meet in the weak order on integer posets: relation meet, increasing
    /// transitive closure, then transitive decreasing deletion.
    pub fn meet(&self, other: &IntegerPoset) -> Result<IntegerPoset, PosetError> {
        let raw = self.rel.meet(&other.rel)?;
        let inc = close_one_side(raw.n, &raw.inc);
        let dec = repair_deletion(raw.n, &inc, raw.dec.clone(), false);
        Ok(IntegerPoset {
            rel: IntegerRelation { n: raw.n, inc, dec },
        })
    }

    /// Join, by the symmetric construction on the decreasing side.
    pub fn join(&self, other: &IntegerPoset) -> Result<IntegerPoset, PosetError> {
        let raw = self.rel.join(&other.rel)?;
        let dec = close_one_side(raw.n, &raw.dec);
        let inc = repair_deletion(raw.n, &dec, raw.inc.clone(), true);
        Ok(IntegerPoset {
            rel: IntegerRelation { n: raw.n, inc, dec },
        })
    }

    /// Element/interval classification tags.
    pub fn classify(&self) -> Vec<Tag> {
        let mut tags = Vec::new();
        if self.is_woep() {
            tags.push(Tag::Woep);
        }
        if self.is_woip() {
            tags.push(Tag::Woip);
        }
        if self.is_toip() {
            tags.push(Tag::Toip);
        }
        if self.is_boip() {
            tags.push(Tag::Boip);
        }
        if self.is_toep() {
            tags.push(Tag::Toep);
        }
        if self.is_boep() {
            tags.push(Tag::Boep);
        }
        tags
    }

    /// Total order: a permutation seen as a poset.
    pub fn is_woep(&self) -> bool {
        let n = self.n() as u8;
        (1..=n).all(|x| (x + 1..=n).all(|y| self.precedes(x, y) || self.precedes(y, x)))
    }

    /// Weak order interval conditions.
    pub fn is_woip(&self) -> bool {
        let n = self.n() as u8;
        for a in 1..=n {
            for c in (a + 1)..=n {
                for b in (a + 1)..c {
                    if self.precedes(a, c) && !self.precedes(a, b) && !self.precedes(b, c) {
                        return false;
                    }
                    if self.precedes(c, a) && !self.precedes(c, b) && !self.precedes(b, a) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Tamari order interval conditions.
    pub fn is_toip(&self) -> bool {
        let n = self.n() as u8;
        for a in 1..=n {
            for c in (a + 1)..=n {
                for b in (a + 1)..c {
                    if self.precedes(a, c) && !self.precedes(b, c) {
                        return false;
                    }
                    if self.precedes(c, a) && !self.precedes(b, a) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Boolean order interval conditions: both sides forced.
    pub fn is_boip(&self) -> bool {
        let n = self.n() as u8;
        for a in 1..=n {
            for c in (a + 1)..=n {
                for b in (a + 1)..c {
                    if self.precedes(a, c) && !(self.precedes(a, b) && self.precedes(b, c)) {
                        return false;
                    }
                    if self.precedes(c, a) && !(self.precedes(c, b) && self.precedes(b, a)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Maximal posets satisfying the Tamari interval conditions.
    pub fn is_toep(&self) -> bool {
        self.is_toip() && self.is_maximal_for(IntegerPoset::is_toip)
    }

    /// Maximal posets satisfying the boolean interval conditions.
    pub fn is_boep(&self) -> bool {
        self.is_boip() && self.is_maximal_for(IntegerPoset::is_boip)
    }

    /// No single relation can be added (closing transitively) while
    /// keeping the property.
    fn is_maximal_for(&self, prop: fn(&IntegerPoset) -> bool) -> bool {
        let n = self.n() as u8;
        for x in 1..=n {
            for y in 1..=n {
                if x == y || self.precedes(x, y) || self.precedes(y, x) {
                    continue;
                }
                if let Some(ext) = self.try_add(x, y) {
                    if prop(&ext) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn try_add(&self, x: u8, y: u8) -> Option<IntegerPoset> {
        let n = self.rel.n;
        let mut mat = vec![vec![false; n + 1]; n + 1];
        for &(a, b) in &self.rel.inc {
            mat[a as usize][b as usize] = true;
        }
        for &(a, b) in &self.rel.dec {
            mat[b as usize][a as usize] = true;
        }
        mat[x as usize][y as usize] = true;
        for k in 1..=n {
            for i in 1..=n {
                if mat[i][k] {
                    for j in 1..=n {
                        if mat[k][j] {
                            mat[i][j] = true;
                        }
                    }
                }
            }
        }
        let mut inc = BTreeSet::new();
        let mut dec = BTreeSet::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                if mat[i][j] && mat[j][i] {
                    return None;
                }
                if mat[i][j] {
                    inc.insert((i as u8, j as u8));
                }
                if mat[j][i] {
                    dec.insert((i as u8, j as u8));
                }
            }
        }
        Some(IntegerPoset {
            rel: IntegerRelation { n, inc, dec },
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tag {
    Woep,
    Woip,
    Toip,
    Boip,
    Toep,
    Boep,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tag::Woep => "WOEP",
            Tag::Woip => "WOIP",
            Tag::Toip => "TOIP",
            Tag::Boip => "BOIP",
            Tag::Toep => "TOEP",
            Tag::Boep => "BOEP",
        };
        write!(f, "{s}")
    }
}

/// Transitive closure within one orientation class (pairs compose only
/// when they chain in the integer order).
fn close_one_side(n: usize, part: &BTreeSet<(u8, u8)>) -> BTreeSet<(u8, u8)> {
    let mut out = part.clone();
    loop {
        let mut added = Vec::new();
        for &(a, b) in &out {
            for c in (b + 1)..=n as u8 {
                if out.contains(&(b, c)) && !out.contains(&(a, c)) {
                    added.push((a, c));
                }
            }
        }
        if added.is_empty() {
            return out;
        }
        out.extend(added);
    }
}

/// Removes pairs of the mutable side that break antisymmetry or
/// transitivity against the fixed closed side, scanning pairs in
/// lexicographic order to a fixpoint. With `mutable_is_inc` false this is
/// the transitive decreasing deletion of the meet.
fn repair_deletion(
    n: usize,
    fixed: &BTreeSet<(u8, u8)>,
    mut mutable: BTreeSet<(u8, u8)>,
    mutable_is_inc: bool,
) -> BTreeSet<(u8, u8)> {
    let related = |mutable: &BTreeSet<(u8, u8)>, x: u8, y: u8| -> bool {
        // fixed holds (a, b) pairs of one orientation, mutable the other
        if x < y {
            if mutable_is_inc {
                mutable.contains(&(x, y))
            } else {
                fixed.contains(&(x, y))
            }
        } else if y < x {
            if mutable_is_inc {
                fixed.contains(&(y, x))
            } else {
                mutable.contains(&(y, x))
            }
        } else {
            false
        }
    };
    loop {
        // all violations of the current round are deleted together, so the
        // fixpoint does not depend on the scan order
        let mut bad_pairs: Vec<(u8, u8)> = Vec::new();
        for &(a, b) in mutable.iter() {
            // orientation of the pair under test
            let (src, dst) = if mutable_is_inc { (a, b) } else { (b, a) };
            let mut bad = fixed.contains(&(a, b));
            if !bad {
                for x in 1..=n as u8 {
                    if x == src || x == dst {
                        continue;
                    }
                    // chain x R src R dst needs x R dst
                    if related(&mutable, x, src) && !related(&mutable, x, dst) {
                        bad = true;
                        break;
                    }
                    // chain src R dst R x needs src R x
                    if related(&mutable, dst, x) && !related(&mutable, src, x) {
                        bad = true;
                        break;
                    }
                }
            }
            if bad {
                bad_pairs.push((a, b));
            }
        }
        if bad_pairs.is_empty() {
            return mutable;
        }
        for p in bad_pairs {
            mutable.remove(&p);
        }
    }
}

/// All integer relations of size n; 4 states per pair, so tiny n only.
pub fn enumerate_relations(n: usize) -> Vec<IntegerRelation> {
    let pairs: Vec<(u8, u8)> = (1..=n as u8)
        .flat_map(|a| ((a + 1)..=n as u8).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    let states = 4u32.pow(pairs.len() as u32);
    for code in 0..states {
        let mut inc = BTreeSet::new();
        let mut dec = BTreeSet::new();
        let mut c = code;
        for &(a, b) in &pairs {
            match c % 4 {
                1 => {
                    inc.insert((a, b));
                }
                2 => {
                    dec.insert((a, b));
                }
                3 => {
                    inc.insert((a, b));
                    dec.insert((a, b));
                }
                _ => {}
            }
            c /= 4;
        }
        out.push(IntegerRelation { n, inc, dec });
    }
    out
}

/// All integer posets of size n.
pub fn enumerate_posets(n: usize) -> Vec<IntegerPoset> {
    // antisymmetry leaves 3 admissible states per pair
    let pairs: Vec<(u8, u8)> = (1..=n as u8)
        .flat_map(|a| ((a + 1)..=n as u8).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    let states = 3u32.pow(pairs.len() as u32);
    for code in 0..states {
        let mut inc = BTreeSet::new();
        let mut dec = BTreeSet::new();
        let mut c = code;
        for &(a, b) in &pairs {
            match c % 3 {
                1 => {
                    inc.insert((a, b));
                }
                2 => {
                    dec.insert((a, b));
                }
                _ => {}
            }
            c /= 3;
        }
        let rel = IntegerRelation { n, inc, dec };
        if rel.is_poset() {
            out.push(IntegerPoset { rel });
        }
    }
    out
}

/// The poset of a permutation: the total order given by its word.
pub fn poset_of_permutation(p: &crate::perm::Permutation) -> IntegerPoset {
    let n = p.len();
    let mut inc = BTreeSet::new();
    let mut dec = BTreeSet::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let (x, y) = (p.word()[i], p.word()[j]);
            if x < y {
                inc.insert((x, y));
            } else {
                dec.insert((y, x));
            }
        }
    }
    IntegerPoset {
        rel: IntegerRelation { n, inc, dec },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::permutations;

    fn rel(n: usize, inc: &[(u8, u8)], dec: &[(u8, u8)]) -> IntegerRelation {
        IntegerRelation::new(n, inc.iter().copied(), dec.iter().copied()).unwrap()
    }

    fn poset(n: usize, inc: &[(u8, u8)], dec: &[(u8, u8)]) -> IntegerPoset {
        IntegerPoset::new(rel(n, inc, dec)).unwrap()
    }

    #[test]
    fn weak_minimum_and_reflexivity() {
        let min = IntegerRelation::weak_minimum(3);
        for r in enumerate_relations(3) {
            assert!(min.weak_le(&r).unwrap());
            assert!(r.weak_le(&r).unwrap());
        }
    }

    #[test]
    fn size2_weak_order_is_the_two_cube() {
        // the figure shows the diamond: increasing-only at the bottom,
        // decreasing-only at the top, empty and full side by side
        let rels = enumerate_relations(2);
        assert_eq!(rels.len(), 4);
        let bottom = rel(2, &[(1, 2)], &[]);
        let top = rel(2, &[], &[(1, 2)]);
        let empty = rel(2, &[], &[]);
        let full = rel(2, &[(1, 2)], &[(1, 2)]);
        for r in &rels {
            assert!(bottom.weak_le(r).unwrap());
            assert!(r.weak_le(&top).unwrap());
        }
        assert!(!empty.weak_le(&full).unwrap() && !full.weak_le(&empty).unwrap());
    }

    #[test]
    fn relation_meet_join_figure() {
        let r = rel(4, &[(1, 2), (1, 3)], &[(2, 3), (1, 4)]);
        let s = rel(4, &[(1, 2), (3, 4), (2, 4)], &[(1, 4), (1, 3), (1, 2)]);
        let meet = r.meet(&s).unwrap();
        assert_eq!(meet, rel(4, &[(1, 2), (1, 3), (3, 4), (2, 4)], &[(1, 4)]));
        let join = r.join(&s).unwrap();
        assert_eq!(join, rel(4, &[(1, 2)], &[(2, 3), (1, 4), (1, 3), (1, 2)]));
        assert_eq!(r.meet(&r).unwrap(), r);
    }

    #[test]
    fn relation_lattice_laws() {
        for n in 1..=3 {
            let rels = enumerate_relations(n);
            assert_eq!(rels.len(), 4usize.pow((n * (n - 1) / 2) as u32));
            for a in &rels {
                for b in &rels {
                    let m = a.meet(b).unwrap();
                    let j = a.join(b).unwrap();
                    assert!(m.weak_le(a).unwrap() && m.weak_le(b).unwrap());
                    assert!(a.weak_le(&j).unwrap() && b.weak_le(&j).unwrap());
                    for c in &rels {
                        if c.weak_le(a).unwrap() && c.weak_le(b).unwrap() {
                            assert!(c.weak_le(&m).unwrap());
                        }
                        if a.weak_le(c).unwrap() && b.weak_le(c).unwrap() {
                            assert!(j.weak_le(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn boolean_dimension() {
        // isomorphic to the boolean lattice of dimension n(n-1): check the
        // rank generating function is (1+q)^(n(n-1)) at q=1 and covers
        for n in 2..=3 {
            let rels = enumerate_relations(n);
            assert_eq!(rels.len(), 1 << (n * (n - 1)));
        }
    }

    #[test]
    fn poset_detection() {
        assert!(rel(3, &[], &[]).is_poset());
        assert!(!rel(3, &[(1, 2), (2, 3)], &[]).is_poset());
        assert!(rel(3, &[(1, 2), (2, 3), (1, 3)], &[]).is_poset());
    }

    #[test]
    fn count_posets_small() {
        assert_eq!(enumerate_posets(2).len(), 3);
        assert_eq!(enumerate_posets(3).len(), 19);
        assert_eq!(enumerate_posets(4).len(), 219);
    }

    #[test]
    fn meet_of_transitive_relations_figure() {
        let p = poset(3, &[(2, 3)], &[(1, 3), (1, 2)]);
        let q = poset(3, &[(1, 2)], &[(2, 3), (1, 3)]);
        let m = p.meet(&q).unwrap();
        assert_eq!(m, poset(3, &[(1, 2), (2, 3), (1, 3)], &[]));
        assert_eq!(p.meet(&p).unwrap(), p);
    }

    #[test]
    fn poset_meet_join_bounds_exhaustive_n3() {
        let posets = enumerate_posets(3);
        for a in &posets {
            for b in &posets {
                let m = a.meet(b).unwrap();
                let j = a.join(b).unwrap();
                assert!(m.relation().is_poset());
                assert!(j.relation().is_poset());
                assert!(m.weak_le(a).unwrap() && m.weak_le(b).unwrap());
                assert!(a.weak_le(&j).unwrap() && b.weak_le(&j).unwrap());
                for c in &posets {
                    if c.weak_le(a).unwrap() && c.weak_le(b).unwrap() {
                        assert!(c.weak_le(&m).unwrap());
                    }
                    if a.weak_le(c).unwrap() && b.weak_le(c).unwrap() {
                        assert!(j.weak_le(c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn poset_meet_join_bounds_sampled_n4() {
        let posets = enumerate_posets(4);
        let mut k = 0usize;
        for a in posets.iter() {
            for b in posets.iter() {
                k += 1;
                if !k.is_multiple_of(697) {
                    continue;
                }
                let m = a.meet(b).unwrap();
                let jn = a.join(b).unwrap();
                assert!(m.relation().is_poset() && jn.relation().is_poset());
                assert!(m.weak_le(a).unwrap() && m.weak_le(b).unwrap());
                assert!(a.weak_le(&jn).unwrap() && b.weak_le(&jn).unwrap());
                for c in &posets {
                    if c.weak_le(a).unwrap() && c.weak_le(b).unwrap() {
                        assert!(c.weak_le(&m).unwrap());
                    }
                    if a.weak_le(c).unwrap() && b.weak_le(c).unwrap() {
                        assert!(jn.weak_le(c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn classification_counts() {
        let posets = enumerate_posets(3);
        assert_eq!(posets.iter().filter(|p| p.is_woep()).count(), 6);
        assert_eq!(posets.iter().filter(|p| p.is_toip()).count(), 13);
        assert_eq!(posets.iter().filter(|p| p.is_boip()).count(), 9);
        assert_eq!(posets.iter().filter(|p| p.is_toep()).count(), 5);
        assert_eq!(posets.iter().filter(|p| p.is_boep()).count(), 4);
    }

    #[test]
    fn woep_counts_are_factorial() {
        for n in 1..=4 {
            let count = enumerate_posets(n).iter().filter(|p| p.is_woep()).count();
            let fact: usize = (1..=n).product();
            assert_eq!(count, fact);
        }
    }

    #[test]
    fn woep_suborder_is_weak_order() {
        for n in 1..=4 {
            for a in permutations(n) {
                for b in permutations(n) {
                    let pa = poset_of_permutation(&a);
                    let pb = poset_of_permutation(&b);
                    assert_eq!(pa.weak_le(&pb).unwrap(), a.weak_le(&b).unwrap());
                }
            }
        }
    }

    #[test]
    fn woep_sublattice() {
        for n in 1..=4 {
            for a in permutations(n) {
                for b in permutations(n) {
                    let pa = poset_of_permutation(&a);
                    let pb = poset_of_permutation(&b);
                    assert_eq!(
                        pa.meet(&pb).unwrap(),
                        poset_of_permutation(&a.weak_meet(&b).unwrap())
                    );
                    assert_eq!(
                        pa.join(&pb).unwrap(),
                        poset_of_permutation(&a.weak_join(&b).unwrap())
                    );
                }
            }
        }
    }

    #[test]
    fn toip_closed_under_meet_join() {
        for n in 1..=4 {
            let toip: Vec<IntegerPoset> = enumerate_posets(n)
                .into_iter()
                .filter(|p| p.is_toip())
                .collect();
            for a in &toip {
                for b in &toip {
                    assert!(a.meet(b).unwrap().is_toip());
                    assert!(a.join(b).unwrap().is_toip());
                }
            }
        }
    }

    #[test]
    fn toip_matches_interval_posets() {
        for n in 1..=4 {
            let toip = enumerate_posets(n)
                .into_iter()
                .filter(|p| p.is_toip())
                .count();
            assert_eq!(toip, crate::intervals::count_intervals(n));
        }
    }
}
