//! Named verification suites: exhaustive cross-checks of every structure
//! in the crate at desk scale. Each suite returns one line per check so
//! front ends can print pass/fail reports.

use crate::integer_posets::{enumerate_posets, poset_of_permutation};
use crate::intervals::{
    count_intervals, count_m_intervals, enumerate_interval_posets, interval_count_formula,
    interval_counts_from_functional_equation, m_interval_count_formula,
};
use crate::perm::{permutations, sylvester_insert, Permutation};
use crate::permutrees::{
    count, enumerate_permutrees, insert, is_minimal, reduced_words, AutomatonU, Decoration,
};
use crate::poly::BivarPoly;
use crate::qt::{
    bounce, deficit_cells, enumerate_area_sequences, enumerate_triangular, schur_expand,
    qt_distribution, Partition, Statistic, TriangularPartition,
};
use crate::sweak::{
    count as s_count, enumerate_pure_intervals, enumerate_trees as s_trees, nu_of_s,
    SDecreasingTree, SSequence,
};
use crate::tamari::enumerate_nu_paths;
use std::collections::BTreeSet;

/// Result of one check inside a suite.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &str, pass: bool, detail: String) -> Check {
    Check {
        name: name.to_string(),
        pass,
        detail,
    }
}

pub const SUITES: [&str; 9] = [
    "tamari-intervals",
    "rise-contact",
    "m-tamari",
    "zeta",
    "integer-posets",
    "permutrees",
    "s-weak",
    "qt",
    "coherence",
];

/// Runs a named suite; `limit` optionally lowers the top size of the
/// heaviest checks (the defaults match the stated criteria).
pub fn run_suite(name: &str, limit: Option<usize>) -> Option<Vec<Check>> {
    match name {
        "tamari-intervals" => Some(suite_tamari_intervals(limit.unwrap_or(6))),
        "rise-contact" => Some(suite_rise_contact(limit.unwrap_or(5))),
        "m-tamari" => Some(suite_m_tamari()),
        "zeta" => Some(suite_zeta(limit.unwrap_or(9))),
        "integer-posets" => Some(suite_integer_posets()),
        "permutrees" => Some(suite_permutrees(limit.unwrap_or(6))),
        "s-weak" => Some(suite_s_weak()),
        "qt" => Some(suite_qt(limit.unwrap_or(12))),
        "coherence" => Some(suite_coherence(limit.unwrap_or(5))),
        _ => None,
    }
}

/// Criterion 1: interval counts by enumeration, closed formula and
/// functional equation agree exactly.
pub fn suite_tamari_intervals(max_n: usize) -> Vec<Check> {
    let expected: [usize; 7] = [1, 1, 3, 13, 68, 399, 2530];
    let series = interval_counts_from_functional_equation(max_n);
    let mut out = Vec::new();
    for n in 1..=max_n {
        let enumerated = count_intervals(n);
        let formula = interval_count_formula(n);
        let coeff = series[n];
        let reference = expected.get(n).copied();
        let pass = enumerated as u128 == formula
            && coeff as usize == enumerated
            && reference.is_none_or(|r| r == enumerated);
        out.push(check(
            &format!("interval-count-n{n}"),
            pass,
            format!("enumeration {enumerated}, formula {formula}, series {coeff}"),
        ));
    }
    out
}

/// Criterion 2: the rise-contact involution and its exchanges.
pub fn suite_rise_contact(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut involution = true;
        let mut exchange = true;
        let mut multisets = true;
        let mut distance = true;
        for p in enumerate_interval_posets(n) {
            let b = p.rise_contact();
            involution &= b.rise_contact() == p;
            exchange &= p.contact_vector()[0] == b.rise_vector()[0]
                && p.rise_vector()[0] == b.contact_vector()[0];
            let mut pc = p.contact_vector();
            let mut br = b.rise_vector();
            pc.sort_unstable();
            br.sort_unstable();
            let mut pr = p.rise_vector();
            let mut bc = b.contact_vector();
            pr.sort_unstable();
            bc.sort_unstable();
            multisets &= pc == br && pr == bc;
            distance &= p.distance() == b.distance();
        }
        out.push(check(
            &format!("rise-contact-n{n}"),
            involution && exchange && multisets && distance,
            format!(
                "involution {involution}, value exchange {exchange}, multisets {multisets}, distance {distance}"
            ),
        ));
    }
    out
}

/// Criterion 3: m-Tamari counts match the product formula and the
/// m-rise-contact involution exchanges the m-statistics.
pub fn suite_m_tamari() -> Vec<Check> {
    let mut out = Vec::new();
    for (m, n) in [(2, 2), (2, 3), (3, 2)] {
        let enumerated = count_m_intervals(m, n);
        let formula = m_interval_count_formula(m, n);
        out.push(check(
            &format!("m-interval-count-m{m}-n{n}"),
            enumerated as u128 == formula,
            format!("enumeration {enumerated}, formula {formula}"),
        ));
    }
    let m = 2;
    for n in 1..=3 {
        let mut involution = true;
        let mut exchange = true;
        for p in enumerate_interval_posets(n * m) {
            if !p.is_m_interval(m).unwrap_or(false) {
                continue;
            }
            let b = p.m_rise_contact(m).expect("m-interval maps");
            involution &= b.m_rise_contact(m).expect("image is m-interval") == p;
            let mut mc = p.m_contact_vector(m).expect("expands");
            let mut mr = b.m_rise_vector(m).expect("expands");
            mc.sort_unstable();
            mr.sort_unstable();
            exchange &= mc == mr;
        }
        out.push(check(
            &format!("m-rise-contact-m2-n{n}"),
            involution && exchange,
            format!("involution {involution}, m-statistic exchange {exchange}"),
        ));
    }
    out
}

/// Criterion 4: the inverse zeta map is a statistic-transporting
/// bijection, and the worked 17-step example reproduces exactly.
pub fn suite_zeta(max_len: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let input = crate::qt::AreaSequence::new(vec![
        0, 1, 2, 1, 1, 1, 2, 3, 3, 0, 1, 1, 0, 1, 2, 2, 1,
    ])
    .expect("valid sequence");
    let image = input.zeta_inverse();
    let printed: Vec<u32> = vec![0, 0, 1, 2, 2, 2, 0, 1, 2, 3, 4, 5, 6, 5, 5, 6, 3];
    out.push(check(
        "zeta-17-step-example",
        image.values() == printed.as_slice(),
        format!("{:?}", image.values()),
    ));
    for n in 1..=max_len {
        let all = enumerate_area_sequences(n);
        let mut images = BTreeSet::new();
        let mut transport = true;
        for a in &all {
            let z = a.zeta_inverse();
            transport &= z.dinv() == a.area() && z.area() == bounce(&a.to_dyck());
            images.insert(z);
        }
        out.push(check(
            &format!("zeta-length-{n}"),
            transport && images.len() == all.len(),
            format!(
                "bijection on {} sequences, transport {transport}",
                all.len()
            ),
        ));
    }
    out
}

/// Criterion 5: the 19 posets of size 3 form a lattice under the repaired
/// meet and join; TOIP is closed; WOEP is the weak order.
pub fn suite_integer_posets() -> Vec<Check> {
    let mut out = Vec::new();
    let posets = enumerate_posets(3);
    out.push(check(
        "poset-count-n3",
        posets.len() == 19,
        format!("{} posets", posets.len()),
    ));
    let mut bounds = true;
    for a in &posets {
        for b in &posets {
            let m = a.meet(b).expect("same size");
            let j = a.join(b).expect("same size");
            bounds &= m.relation().is_poset()
                && j.relation().is_poset()
                && m.weak_le(a).unwrap()
                && m.weak_le(b).unwrap()
                && a.weak_le(&j).unwrap()
                && b.weak_le(&j).unwrap();
            for c in &posets {
                if c.weak_le(a).unwrap() && c.weak_le(b).unwrap() {
                    bounds &= c.weak_le(&m).unwrap();
                }
                if a.weak_le(c).unwrap() && b.weak_le(c).unwrap() {
                    bounds &= j.weak_le(c).unwrap();
                }
            }
        }
    }
    out.push(check(
        "poset-meet-join-oracle-n3",
        bounds,
        "exhaustive greatest-lower/least-upper bound scan".into(),
    ));
    let toip: Vec<_> = posets.iter().filter(|p| p.is_toip()).collect();
    let mut closed = toip.len() == 13;
    for a in &toip {
        for b in &toip {
            closed &= a.meet(b).unwrap().is_toip() && a.join(b).unwrap().is_toip();
        }
    }
    out.push(check(
        "toip-sublattice-n3",
        closed,
        format!("{} elements, closed under meet and join", toip.len()),
    ));
    let mut iso = true;
    for a in permutations(3) {
        for b in permutations(3) {
            iso &= poset_of_permutation(&a)
                .weak_le(&poset_of_permutation(&b))
                .unwrap()
                == a.weak_le(&b).unwrap();
        }
    }
    out.push(check(
        "woep-is-weak-order-n3",
        iso,
        "order isomorphism with the weak order".into(),
    ));
    out
}

/// Criterion 6: factorial-Catalan values, recursion vs class counts,
/// automata vs patterns, and the vertex coordinates.
pub fn suite_permutrees(max_count_len: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let f_nndn = count(&Decoration::parse("NNDN").expect("valid"));
    let f_nbun = count(&Decoration::parse("NBUN").expect("valid"));
    out.push(check(
        "factorial-catalan-values",
        f_nndn == 18 && f_nbun == 10,
        format!("F(NNDN) = {f_nndn}, F(NBUN) = {f_nbun}"),
    ));
    let mut recursion = true;
    for n in 1..=max_count_len {
        for delta in Decoration::all(n) {
            if count(&delta) != enumerate_permutrees(&delta).len() as u64 {
                recursion = false;
            }
        }
    }
    out.push(check(
        &format!("count-recursion-len{max_count_len}"),
        recursion,
        "recursion equals class enumeration for every decoration".into(),
    ));
    // automata vs patterns for all p and all decorations of length <= 5;
    // only the symbols strictly inside the word matter, so group by them
    let mut automata = true;
    for n in 1..=5usize {
        let perms = permutations(n);
        let words: Vec<Vec<Vec<u8>>> = perms.iter().map(reduced_words).collect();
        let inner = if n >= 2 {
            Decoration::all(n - 2)
        } else {
            vec![Decoration::parse("").expect("empty")]
        };
        for mid in inner {
            let mut syms = vec![crate::permutrees::Sym::N];
            if n >= 2 {
                syms.extend_from_slice(mid.syms());
                syms.push(crate::permutrees::Sym::N);
            }
            syms.truncate(n);
            let delta = Decoration::new(syms);
            let nn = n as u8;
            let mut ups = Vec::new();
            let mut downs = Vec::new();
            for j in 2..nn {
                if delta.sym(j).is_up() {
                    ups.push(AutomatonU::new(j, nn));
                }
                if delta.sym(j).is_down() {
                    downs.push(AutomatonU::new(nn + 1 - j, nn));
                }
            }
            for (p, ws) in perms.iter().zip(&words) {
                let by_auto = ups.iter().all(|a| ws.iter().any(|w| a.accepts(w)))
                    && downs.iter().all(|a| {
                        ws.iter().any(|w| {
                            let m: Vec<u8> = w.iter().map(|&l| nn - l).collect();
                            a.accepts(&m)
                        })
                    });
                if by_auto != is_minimal(p, &delta) {
                    automata = false;
                }
            }
        }
    }
    out.push(check(
        "automata-vs-patterns-n5",
        automata,
        "acceptance equals pattern avoidance for every decoration".into(),
    ));
    let figure = insert(
        &Permutation::parse("2751346").expect("valid"),
        &Decoration::parse("DUNBNDU").expect("valid"),
    )
    .expect("sizes match");
    out.push(check(
        "figure-coordinates",
        figure.coordinates() == vec![7, -4, 3, 8, 1, 12, 1],
        format!("{:?}", figure.coordinates()),
    ));
    let mut sums = true;
    for n in 1..=6 {
        let target = (n * (n + 1) / 2) as i64;
        for delta in Decoration::all(n).into_iter().step_by(11) {
            for t in enumerate_permutrees(&delta) {
                sums &= t.coordinates().iter().sum::<i64>() == target;
            }
        }
    }
    out.push(check(
        "coordinate-hyperplane-n6",
        sums,
        "coordinate sums are n(n+1)/2".into(),
    ));
    out
}

/// Criterion 7: s-weak order counts, lattice oracles, s-Tamari closure
/// and isomorphism, and the pure-interval intersection theorem.
pub fn suite_s_weak() -> Vec<Check> {
    let mut out = Vec::new();
    // 20 deterministic pseudo-random sequences with product <= 5000
    let mut state = 0x3ad5_9c1eu64;
    let mut rand = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut sequences: Vec<SSequence> = Vec::new();
    while sequences.len() < 20 {
        let len = 2 + (rand() % 5) as usize;
        let s: SSequence = (0..len).map(|_| (rand() % 4) as u32).collect();
        if s_count(&s) <= 5000 {
            sequences.push(s);
        }
    }
    let mut counts_ok = true;
    for s in &sequences {
        counts_ok &= s_trees(s).len() as u64 == s_count(s);
    }
    out.push(check(
        "count-formula-20-random",
        counts_ok,
        format!("{:?} ...", &sequences[..3]),
    ));
    for s in [vec![0u32, 2, 3], vec![1, 1, 1, 1]] {
        let trees = s_trees(&s);
        let mut bounds = true;
        for a in &trees {
            for b in &trees {
                let j = a.s_join(b).expect("same s");
                let m = a.s_meet(b).expect("same s");
                bounds &= m.s_weak_le(a).unwrap()
                    && m.s_weak_le(b).unwrap()
                    && a.s_weak_le(&j).unwrap()
                    && b.s_weak_le(&j).unwrap();
                for c in &trees {
                    if a.s_weak_le(c).unwrap() && b.s_weak_le(c).unwrap() {
                        bounds &= j.s_weak_le(c).unwrap();
                    }
                    if c.s_weak_le(a).unwrap() && c.s_weak_le(b).unwrap() {
                        bounds &= c.s_weak_le(&m).unwrap();
                    }
                }
            }
        }
        out.push(check(
            &format!("meet-join-oracle-{s:?}"),
            bounds,
            "exhaustive bound scan".into(),
        ));
    }
    for s in [vec![0u32, 2, 3], vec![1, 1, 1], vec![0, 2, 2]] {
        let trees = s_trees(&s);
        let tamari: Vec<&SDecreasingTree> = trees.iter().filter(|t| t.is_s_tamari()).collect();
        let mut closed = true;
        for a in &tamari {
            for b in &tamari {
                closed &= a.s_join(b).unwrap().is_s_tamari()
                    && a.s_meet(b).unwrap().is_s_tamari();
            }
        }
        let nu = nu_of_s(&s);
        let paths = enumerate_nu_paths(&nu);
        out.push(check(
            &format!("s-tamari-{s:?}"),
            closed && tamari.len() == paths.len(),
            format!(
                "closed {closed}, {} trees vs {} nu paths",
                tamari.len(),
                paths.len()
            ),
        ));
    }
    let s = vec![0u32, 2, 2];
    let pure = enumerate_pure_intervals(&s);
    let sets: Vec<BTreeSet<SDecreasingTree>> = pure
        .iter()
        .map(|p| p.elements().into_iter().collect())
        .collect();
    let mut closure = true;
    for i in 0..pure.len() {
        for j in i..pure.len() {
            match pure[i].intersect(&pure[j]) {
                Ok(None) => closure &= sets[i].is_disjoint(&sets[j]),
                Ok(Some(p)) => {
                    let got: BTreeSet<SDecreasingTree> = p.elements().into_iter().collect();
                    let expected: BTreeSet<SDecreasingTree> =
                        sets[i].intersection(&sets[j]).cloned().collect();
                    closure &= got == expected;
                }
                Err(_) => closure = false,
            }
        }
    }
    out.push(check(
        "pure-interval-intersections-022",
        closure,
        format!("{} pure intervals, pairwise closed", pure.len()),
    ));
    out
}

/// Criterion 8: q,t distributions, deficit complementarity and the Schur
/// expansion of the classical polynomial.
pub fn suite_qt(max_deficit_size: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let mut classical = true;
    for n in 2..=8 {
        let tri = TriangularPartition::new(Partition::staircase(n)).expect("triangular");
        let p = qt_distribution(&tri, Statistic::Area, Statistic::Sim).expect("contained");
        classical &= p.is_symmetric();
        if n == 3 {
            let mut expected = BivarPoly::zero();
            for (q, t) in [(3, 0), (2, 1), (1, 2), (1, 1), (0, 3)] {
                expected.add_term(q, t, 1);
            }
            classical &= p == expected;
        }
    }
    out.push(check(
        "classical-qt-catalan-n8",
        classical,
        "staircase (area, sim) distributions are symmetric".into(),
    ));
    let mut complement = true;
    for n in 3..=max_deficit_size as u64 {
        for tri in enumerate_triangular(n) {
            let theta = tri.triangular_tableau();
            for mu in tri.partition().sub_partitions() {
                let sims: BTreeSet<(u32, usize)> =
                    tri.sim_cells(&mu).expect("contained").into_iter().collect();
                let dc: BTreeSet<(u32, usize)> = deficit_cells(tri.partition(), &mu, &theta)
                    .expect("standard")
                    .into_iter()
                    .collect();
                let non_sim: BTreeSet<(u32, usize)> = mu
                    .cells()
                    .into_iter()
                    .filter(|c| !sims.contains(c))
                    .collect();
                complement &= dc == non_sim;
            }
        }
    }
    out.push(check(
        &format!("deficit-complementarity-{max_deficit_size}"),
        complement,
        "deficit cells of the triangular tableau are the non-sim cells".into(),
    ));
    let sub = Partition::new(vec![3, 2, 2, 1])
        .expect("partition")
        .sub_partitions()
        .len();
    out.push(check(
        "subpartitions-3221",
        sub == 23,
        format!("{sub} sub-partitions"),
    ));
    let tri = TriangularPartition::new(Partition::staircase(3)).expect("triangular");
    let p = qt_distribution(&tri, Statistic::Area, Statistic::Sim).expect("contained");
    let coeffs = schur_expand(&p).expect("symmetric");
    out.push(check(
        "schur-expansion-n3",
        coeffs == vec![((1, 1), 1), ((3, 0), 1)] && coeffs.iter().all(|&(_, c)| c >= 0),
        format!("{coeffs:?}"),
    ));
    out
}

/// Criterion 9: sylvester classes, permutree down-decorated classes and
/// Tamari fibers agree, and the paper's weak-order meet/join example.
pub fn suite_coherence(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let mut classes = true;
    for n in 1..=max_n {
        let delta = Decoration::uniform(crate::permutrees::Sym::D, n);
        for p in permutations(n) {
            // the congruence class by rewrite closure of the sylvester rule
            let mut seen: BTreeSet<Permutation> = BTreeSet::new();
            let mut stack = vec![p.clone()];
            while let Some(w) = stack.pop() {
                if seen.insert(w.clone()) {
                    stack.extend(crate::permutrees::rewrite_neighbors(&w, &delta));
                }
            }
            for q in permutations(n) {
                let by_sylvester = sylvester_insert(&p) == sylvester_insert(&q);
                let by_permutree =
                    insert(&p, &delta).expect("size") == insert(&q, &delta).expect("size");
                let by_congruence = seen.contains(&q);
                if by_sylvester != by_permutree || by_sylvester != by_congruence {
                    classes = false;
                }
            }
        }
    }
    out.push(check(
        &format!("sylvester-equals-permutree-classes-n{max_n}"),
        classes,
        "insertion fibers and congruence classes agree for all-down".into(),
    ));
    let a = Permutation::parse("3214").expect("valid");
    let b = Permutation::parse("3142").expect("valid");
    let meet = a.weak_meet(&b).expect("same size");
    let join = a.weak_join(&b).expect("same size");
    out.push(check(
        "weak-meet-join-example",
        meet == Permutation::parse("3124").unwrap() && join == Permutation::parse("3421").unwrap(),
        format!("meet {meet}, join {join}"),
    ));
    out
}
