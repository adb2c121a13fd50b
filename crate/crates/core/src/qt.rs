//! Area sequences with area/dinv/bounce and the inverse zeta insertion,
//! triangular partitions with sim and deficit cells, q,t distributions
//! and the two-row Schur expansion.
//!
//! Cells are addressed as (column, row), both 0-based columns and 1-based
//! rows drawn bottom-up. A triangular partition is certified by an exact
//! rational slope window; the canonical slope is the window midpoint,
//! with comparisons arranged as if it were perturbed below by an
//! infinitesimal so that sweeps meet one cell at a time.

use crate::poly::BivarPoly;
use crate::rat::Rat;
use crate::tamari::DyckPath;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QtError {
    NotAnAreaSequence(String),
    PositionOutOfRange(usize),
    NotAPartition(Vec<u32>),
    NotTriangular(Vec<u32>),
    NotContained,
    NotStandard,
    NotSymmetric,
    InvalidLine(usize),
}

impl fmt::Display for QtError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QtError::NotAnAreaSequence(s) => write!(f, "not an area sequence: {s}"),
            QtError::PositionOutOfRange(i) => write!(f, "position {i} out of range"),
            QtError::NotAPartition(v) => write!(f, "not a partition: {v:?}"),
            QtError::NotTriangular(v) => write!(f, "not triangular: {v:?}"),
            QtError::NotContained => write!(f, "not a sub-partition"),
            QtError::NotStandard => write!(f, "not a standard tableau"),
            QtError::NotSymmetric => write!(f, "polynomial is not symmetric"),
            QtError::InvalidLine(l) => write!(f, "row {l} is not a removable corner"),
        }
    }
}

impl std::error::Error for QtError {}

/// The area sequence of a Dyck path: a_1 = 0 and a_{i+1} <= a_i + 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AreaSequence {
    a: Vec<u32>,
}

impl fmt::Debug for AreaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AreaSequence({:?})", self.a)
    }
}

impl AreaSequence {
    pub fn new(a: Vec<u32>) -> Result<Self, QtError> {
        if let Some(&first) = a.first() {
            if first != 0 {
                return Err(QtError::NotAnAreaSequence("must start at 0".into()));
            }
        }
        for w in a.windows(2) {
            if w[1] > w[0] + 1 {
                return Err(QtError::NotAnAreaSequence(format!(
                    "{} after {}",
                    w[1], w[0]
                )));
            }
        }
        Ok(AreaSequence { a })
    }

    pub fn values(&self) -> &[u32] {
        &self.a
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn area(&self) -> u64 {
        self.a.iter().map(|&x| x as u64).sum()
    }

    /// Pairs i < j with a_j equal to a_i or a_i - 1.
    pub fn dinv(&self) -> u64 {
        let mut count = 0u64;
        for i in 0..self.a.len() {
            for j in (i + 1)..self.a.len() {
                if self.a[j] == self.a[i] || self.a[j] + 1 == self.a[i] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Inserts the value a_i + 1 after position i; position 0 prepends 0.
    pub fn insert(&self, i: usize) -> Result<AreaSequence, QtError> {
        if i > self.a.len() {
            return Err(QtError::PositionOutOfRange(i));
        }
        let mut a = self.a.clone();
        let v = if i == 0 { 0 } else { a[i - 1] + 1 };
        a.insert(i, v);
        AreaSequence::new(a)
    }

    /// Gain of dinv when inserting after position i.
    /// Gain of dinv when inserting after position i.
    pub fn insertion_gain(&self, i: usize) -> u64 {
        let v = if i == 0 { 0 } else { self.a[i - 1] + 1 };
        let mut gain = 0u64;
        for (q, &x) in self.a.iter().enumerate() {
            if q < i {
                // pair (q, new): counts when v = x or v = x - 1
                if v == x || v + 1 == x {
                    gain += 1;
                }
            } else {
                // pair (new, q): counts when x = v or x = v - 1
                if x == v || x + 1 == v {
                    gain += 1;
                }
            }
        }
        gain
    }

    /// The zeta map read off the diagonals: for each level k the entries
    /// equal to k contribute a north step and those equal to k-1 an east
    /// step, scanning left to right.
    pub fn zeta(&self) -> AreaSequence {
        let n = self.a.len();
        let top = self.a.iter().copied().max().unwrap_or(0);
        let mut word = Vec::with_capacity(2 * n);
        for k in 0..=top + 1 {
            for &x in &self.a {
                if x == k {
                    word.push(true);
                } else if x + 1 == k {
                    word.push(false);
                }
            }
        }
        AreaSequence::from_dyck(&DyckPath::new(word).expect("ballot by construction"))
    }

    /// The inverse zeta map, built by reading the sequence left to right
    /// and inserting into the image so that its zeta image stays the
    /// prefix read so far; each step raises the dinv of the image by
    /// exactly the value read.
    pub fn zeta_inverse(&self) -> AreaSequence {
        let mut image = AreaSequence { a: Vec::new() };
        for (i, &target) in self.a.iter().enumerate() {
            let prefix = &self.a[..=i];
            let found = (0..=image.a.len())
                .rev()
                .map(|p| (p, image.insert(p).expect("insertion stays valid")))
                .find(|(_, cand)| cand.zeta().values() == prefix)
                .expect("some insertion extends the prefix");
            debug_assert_eq!(image.insertion_gain(found.0), target as u64);
            image = found.1;
        }
        image
    }

    /// The Dyck path with 1 = north whose sub-partition rows read off this
    /// sequence.
    pub fn to_dyck(&self) -> DyckPath {
        let n = self.a.len();
        let mut word = Vec::with_capacity(2 * n);
        // i-th north step is preceded by (i-1) - a_i east steps
        let mut easts_done = 0u32;
        for i in 1..=n {
            let target = (i as u32 - 1) - self.a[i - 1];
            while easts_done < target {
                word.push(false);
                easts_done += 1;
            }
            word.push(true);
        }
        while word.len() < 2 * n {
            word.push(false);
        }
        DyckPath::new(word).expect("ballot by construction")
    }

    pub fn from_dyck(d: &DyckPath) -> AreaSequence {
        let mut a = Vec::with_capacity(d.n());
        let mut norths = 0u32;
        let mut easts = 0u32;
        for &b in d.word() {
            if b {
                a.push(norths - easts);
                norths += 1;
            } else {
                easts += 1;
            }
        }
        AreaSequence { a }
    }
}

/// Haglund's bounce statistic of a Dyck path (1 = north, 0 = east).
pub fn bounce(d: &DyckPath) -> u64 {
    let n = d.n();
    if n == 0 {
        return 0;
    }
    // height of the path above each east step
    let mut heights = Vec::with_capacity(n);
    let mut norths = 0u64;
    for &b in d.word() {
        if b {
            norths += 1;
        } else {
            heights.push(norths);
        }
    }
    let mut total = 0u64;
    let mut j = 0u64;
    while (j as usize) < n {
        j = heights[j as usize];
        if (j as usize) < n {
            total += n as u64 - j;
        }
    }
    total
}

/// All area sequences of length n, lexicographically.
pub fn enumerate_area_sequences(n: usize) -> Vec<AreaSequence> {
    let mut out = Vec::new();
    let mut prefix: Vec<u32> = Vec::with_capacity(n);
    fn rec(n: usize, prefix: &mut Vec<u32>, out: &mut Vec<AreaSequence>) {
        if prefix.len() == n {
            out.push(AreaSequence { a: prefix.clone() });
            return;
        }
        let hi = prefix.last().map_or(0, |&x| x + 1);
        for v in 0..=hi {
            prefix.push(v);
            rec(n, prefix, out);
            prefix.pop();
        }
    }
    rec(n, &mut prefix, &mut out);
    out
}

/// A partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({:?})", self.parts)
    }
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, QtError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(QtError::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn staircase(n: usize) -> Self {
        Partition {
            parts: (1..n as u32).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Row length with zero padding.
    pub fn row(&self, j: usize) -> u32 {
        if j >= 1 && j <= self.parts.len() {
            self.parts[j - 1]
        } else {
            0
        }
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&x| x as u64).sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.rows()).all(|j| other.row(j) <= self.row(j))
    }

    /// Cells as (column 0-based, row 1-based).
    pub fn cells(&self) -> Vec<(u32, usize)> {
        let mut out = Vec::new();
        for j in 1..=self.rows() {
            for i in 0..self.row(j) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn has_cell(&self, i: u32, j: usize) -> bool {
        i < self.row(j)
    }

    /// Cells right of (i, j) in its row.
    pub fn arm(&self, i: u32, j: usize) -> u32 {
        self.row(j).saturating_sub(i + 1)
    }

    /// Cells above (i, j) in its column.
    pub fn leg(&self, i: u32, j: usize) -> u32 {
        ((j + 1)..=self.rows()).filter(|&r| self.row(r) > i).count() as u32
    }

    /// All sub-partitions, lexicographically by rows.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut rows: Vec<u32> = Vec::new();
        fn rec(lambda: &Partition, j: usize, rows: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if j > lambda.rows() {
                out.push(Partition::new(rows.clone()).expect("weakly decreasing"));
                return;
            }
            let cap = lambda.row(j).min(rows.last().copied().unwrap_or(u32::MAX));
            for v in 0..=cap {
                rows.push(v);
                rec(lambda, j + 1, rows, out);
                rows.pop();
            }
        }
        rec(self, 1, &mut rows, &mut out);
        out
    }
}

/// All partitions of n.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts: Vec<u32> = Vec::new();
    fn rec(remaining: u64, cap: u32, parts: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(parts.clone()).expect("decreasing"));
            return;
        }
        let hi = (cap as u64).min(remaining) as u32;
        for v in (1..=hi).rev() {
            parts.push(v);
            rec(remaining - v as u64, v, parts, out);
            parts.pop();
        }
    }
    rec(n, u32::MAX, &mut parts, &mut out);
    out
}

/// A partition certified as the maximal one below some line, with its
/// exact slope window and the canonical mean slope.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriangularPartition {
    lambda: Partition,
    window: (Rat, Option<Rat>),
    tau: Rat,
}

impl TriangularPartition {
    pub fn new(lambda: Partition) -> Result<Self, QtError> {
        match slope_window(&lambda) {
            Some(window) => {
                let tau = match window {
                    (lo, Some(hi)) => (lo + hi).half(),
                    (lo, None) => lo + Rat::int(1),
                };
                Ok(TriangularPartition {
                    lambda,
                    window,
                    tau,
                })
            }
            None => Err(QtError::NotTriangular(lambda.parts().to_vec())),
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.lambda
    }

    /// The open interval of admissible slopes (run over rise).
    pub fn slope_window(&self) -> (Rat, Option<Rat>) {
        self.window
    }

    /// Midpoint of the window; all comparisons treat it as perturbed by a
    /// negative infinitesimal.
    pub fn mean_slope(&self) -> Rat {
        self.tau
    }

    /// Similar cells of a sub-partition: the hook of the cell straddles
    /// the mean slope.
    pub fn sim_cells(&self, mu: &Partition) -> Result<Vec<(u32, usize)>, QtError> {
        if !self.lambda.contains(mu) {
            return Err(QtError::NotContained);
        }
        let mut out = Vec::new();
        for (i, j) in mu.cells() {
            let arm = mu.arm(i, j);
            let leg = mu.leg(i, j);
            // cell_min_slope < tau - eps and tau - eps <= cell_max_slope,
            // which is min < tau and tau <= max for exact rationals
            let min_slope = Rat::new(arm as i128, leg as i128 + 1);
            let min_ok = min_slope < self.tau;
            let max_ok = match leg {
                0 => true,
                l => self.tau <= Rat::new(arm as i128 + 1, l as i128),
            };
            if min_ok && max_ok {
                out.push((i, j));
            }
        }
        Ok(out)
    }

    pub fn sim(&self, mu: &Partition) -> Result<u64, QtError> {
        Ok(self.sim_cells(mu)?.len() as u64)
    }

    /// Sweeps the slope toward the origin and numbers the cells in the
    /// order they are touched.
    pub fn triangular_tableau(&self) -> Tableau {
        let mut cells = self.lambda.cells();
        // touch level of (i, j) is (i+1) + j*tau; the negative perturbation
        // of tau breaks ties toward the higher row
        cells.sort_by(|&(i1, j1), &(i2, j2)| {
            let k1 = Rat::int(i1 as i128 + 1) + self.tau * Rat::int(j1 as i128);
            let k2 = Rat::int(i2 as i128 + 1) + self.tau * Rat::int(j2 as i128);
            k1.cmp(&k2).then(j2.cmp(&j1))
        });
        let mut rows: Vec<Vec<u32>> = (1..=self.lambda.rows())
            .map(|j| vec![0; self.lambda.row(j) as usize])
            .collect();
        for (value, (i, j)) in cells.into_iter().enumerate() {
            rows[j - 1][i as usize] = value as u32 + 1;
        }
        Tableau { rows }
    }
}

/// Exact feasibility window for the slope of a triangular partition.
/// Returns (strict lower bound, optional strict upper bound); the
/// partition is triangular when the interval is nonempty.
fn slope_window(lambda: &Partition) -> Option<(Rat, Option<Rat>)> {
    let k = lambda.rows();
    if k == 0 {
        return Some((Rat::zero(), None));
    }
    let part = |j: usize| lambda.row(j) as i128;
    let mut lo = Rat::zero();
    let mut hi: Option<Rat> = None;
    for i in 1..=k {
        for j in 1..=k {
            // lambda_j + j t < lambda_i + 1 + i t
            match i.cmp(&j) {
                std::cmp::Ordering::Greater => {
                    let bound = Rat::new(part(j) - part(i) - 1, (i - j) as i128);
                    if bound > lo {
                        lo = bound;
                    }
                }
                std::cmp::Ordering::Less => {
                    let bound = Rat::new(part(j) - part(i) - 1, i as i128 - j as i128);
                    if hi.is_none_or(|h| bound < h) {
                        hi = Some(bound);
                    }
                }
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    for j in 1..=k {
        // row k+1 stays empty: lambda_j + j t < 1 + (k+1) t
        let bound = Rat::new(part(j) - 1, (k + 1 - j) as i128);
        if bound > lo {
            lo = bound;
        }
    }
    match hi {
        Some(h) if lo >= h => None,
        _ => Some((lo, hi)),
    }
}

pub fn is_triangular(lambda: &Partition) -> bool {
    slope_window(lambda).is_some()
}

/// All triangular partitions of n.
pub fn enumerate_triangular(n: u64) -> Vec<TriangularPartition> {
    partitions_of(n)
        .into_iter()
        .filter_map(|p| TriangularPartition::new(p).ok())
        .collect()
}

/// A filling of a partition shape, rows bottom-up.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("tableau rows weakly decrease")
    }

    pub fn value(&self, i: u32, j: usize) -> u32 {
        self.rows[j - 1][i as usize]
    }

    /// Rows and columns strictly increasing, entries exactly 1..=n.
    pub fn is_standard(&self) -> bool {
        let shape = match Partition::new(self.rows.iter().map(|r| r.len() as u32).collect()) {
            Ok(p) => p,
            Err(_) => return false,
        };
        let n = shape.size() as u32;
        let mut seen = vec![false; n as usize + 1];
        for row in &self.rows {
            for w in row.windows(2) {
                if w[0] >= w[1] {
                    return false;
                }
            }
            for &v in row {
                if v == 0 || v > n || seen[v as usize] {
                    return false;
                }
                seen[v as usize] = true;
            }
        }
        for j in 1..self.rows.len() {
            for i in 0..self.rows[j].len() {
                if self.rows[j - 1][i] >= self.rows[j][i] {
                    return false;
                }
            }
        }
        true
    }
}

/// Deficit cells of a sub-partition under a tableau: the inner corners of
/// the inversion pairs (a cell inside with a larger entry than a cell
/// outside).
pub fn deficit_cells(
    lambda: &Partition,
    mu: &Partition,
    theta: &Tableau,
) -> Result<Vec<(u32, usize)>, QtError> {
    if theta.shape() != *lambda {
        return Err(QtError::NotStandard);
    }
    if !lambda.contains(mu) {
        return Err(QtError::NotContained);
    }
    let mut out = BTreeSet::new();
    let inside: Vec<(u32, usize)> = mu.cells();
    let outside: Vec<(u32, usize)> = lambda
        .cells()
        .into_iter()
        .filter(|&(i, j)| !mu.has_cell(i, j))
        .collect();
    for &(ci, cj) in &inside {
        for &(oi, oj) in &outside {
            if theta.value(ci, cj) > theta.value(oi, oj) {
                out.insert((ci.min(oi), cj.min(oj)));
            }
        }
    }
    Ok(out.into_iter().collect())
}

pub fn deficit(lambda: &Partition, mu: &Partition, theta: &Tableau) -> Result<u64, QtError> {
    Ok(deficit_cells(lambda, mu, theta)?.len() as u64)
}

/// Statistics available for q,t distributions over sub-partitions.
pub enum Statistic<'a> {
    /// Cells of lambda outside mu.
    Area,
    /// Similar cells of mu.
    Sim,
    /// Cells of mu that are deficit cells for the tableau.
    Deficit(&'a Tableau),
}

/// Distribution of a pair of statistics over all sub-partitions.
pub fn qt_distribution(
    tri: &TriangularPartition,
    qstat: Statistic<'_>,
    tstat: Statistic<'_>,
) -> Result<BivarPoly, QtError> {
    let mut out = BivarPoly::zero();
    for mu in tri.partition().sub_partitions() {
        let eval = |stat: &Statistic<'_>| -> Result<u64, QtError> {
            Ok(match stat {
                Statistic::Area => tri.partition().size() - mu.size(),
                Statistic::Sim => tri.sim(&mu)?,
                Statistic::Deficit(theta) => deficit(tri.partition(), &mu, theta)?,
            })
        };
        let q = eval(&qstat)?;
        let t = eval(&tstat)?;
        out.add_term(q as u32, t as u32, 1);
    }
    Ok(out)
}

/// Coefficients of a two-row Schur expansion, keyed by (a, b) with a >= b.
pub type SchurCoefficients = Vec<((u32, u32), i64)>;

/// Expands a symmetric polynomial over the two-variable Schur basis
/// s_(a,b)(q,t) = sum_{k=b..a} q^k t^(a+b-k). Coefficients may be
/// negative; Schur positivity is their nonnegativity.
pub fn schur_expand(p: &BivarPoly) -> Result<SchurCoefficients, QtError> {
    if !p.is_symmetric() {
        return Err(QtError::NotSymmetric);
    }
    let mut rest = p.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        // the lex-largest monomial q^a t^b has a >= b by symmetry
        let ((a, b), c) = rest
            .terms()
            .max_by_key(|&((i, j), _)| (i, j))
            .expect("nonzero polynomial");
        debug_assert!(a >= b);
        rest = rest.sub(&schur_two_rows(a, b).scale(c));
        out.push(((a, b), c));
    }
    out.sort_by_key(|&(k, _)| k);
    Ok(out)
}

/// The two-row Schur polynomial in the variables q, t.
pub fn schur_two_rows(a: u32, b: u32) -> BivarPoly {
    let mut out = BivarPoly::zero();
    for k in b..=a {
        out.add_term(k, a + b - k, 1);
    }
    out
}

/// A sub-partition of a triangular partition seen as a lattice path.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TriangularDyckPath {
    lambda: Partition,
    mu: Partition,
}

impl TriangularDyckPath {
    pub fn new(tri: &TriangularPartition, mu: Partition) -> Result<Self, QtError> {
        if !tri.partition().contains(&mu) {
            return Err(QtError::NotContained);
        }
        Ok(TriangularDyckPath {
            lambda: tri.partition().clone(),
            mu,
        })
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// Rotation at a removable corner: the row loses a cell, and the rows
    /// below with strictly more remaining length follow.
    pub fn rotate(&self, line: usize) -> Result<TriangularDyckPath, QtError> {
        let rows = self.mu.rows();
        if line == 0 || line > rows || self.mu.row(line) == 0 {
            return Err(QtError::InvalidLine(line));
        }
        if self.mu.row(line + 1) == self.mu.row(line) {
            return Err(QtError::InvalidLine(line));
        }
        let remaining = |j: usize| self.lambda.row(j) - self.mu.row(j);
        let v = remaining(line);
        let mut parts: Vec<u32> = (1..=self.mu.rows()).map(|j| self.mu.row(j)).collect();
        parts[line - 1] -= 1;
        let mut j = line;
        while j > 1 && remaining(j - 1) > v {
            parts[j - 2] -= 1;
            j -= 1;
        }
        let mu = Partition::new(parts).map_err(|_| QtError::InvalidLine(line))?;
        if !self.lambda.contains(&mu) {
            return Err(QtError::InvalidLine(line));
        }
        Ok(TriangularDyckPath {
            lambda: self.lambda.clone(),
            mu,
        })
    }

    /// Upward covers: one rotation per removable corner.
    pub fn covers(&self) -> Vec<TriangularDyckPath> {
        (1..=self.mu.rows())
            .filter(|&j| self.mu.row(j) > 0 && self.mu.row(j + 1) < self.mu.row(j))
            .filter_map(|j| self.rotate(j).ok())
            .collect()
    }
}

/// q^distance t^sim(theta, upper) summed over the intervals of the
/// rotation order on sub-partitions.
pub fn interval_qt(tri: &TriangularPartition, theta: &Tableau) -> Result<BivarPoly, QtError> {
    if theta.shape() != *tri.partition() {
        return Err(QtError::NotStandard);
    }
    let elems: Vec<TriangularDyckPath> = tri
        .partition()
        .sub_partitions()
        .into_iter()
        .map(|mu| TriangularDyckPath {
            lambda: tri.partition().clone(),
            mu,
        })
        .collect();
    let idx = |p: &TriangularDyckPath| elems.iter().position(|q| q == p).expect("enumerated");
    let n = elems.len();
    let mut cover_edges: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, p) in elems.iter().enumerate() {
        for c in p.covers() {
            cover_edges[i].push(idx(&c));
        }
    }
    // longest path from each source through the cover digraph
    let mut out = BivarPoly::zero();
    for start in 0..n {
        let mut dist: Vec<Option<u32>> = vec![None; n];
        dist[start] = Some(0);
        // relax in topological-ish rounds; the digraph is acyclic and tiny
        for _ in 0..n {
            let mut changed = false;
            for i in 0..n {
                if let Some(d) = dist[i] {
                    for &j in &cover_edges[i] {
                        if dist[j].is_none_or(|old| old < d + 1) {
                            dist[j] = Some(d + 1);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        for (j, d) in dist.iter().enumerate() {
            if let Some(d) = d {
                let sim_upper = elems[j].mu.size()
                    - deficit(tri.partition(), &elems[j].mu, theta)?;
                out.add_term(*d, sim_upper as u32, 1);
            }
        }
    }
    Ok(out)
}
