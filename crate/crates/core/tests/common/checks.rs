//! Whole-suite checks, each returning the first failure it finds.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;

use gl3branch::cli::{build_diagram, table_rows};
use gl3branch::cosets::{
    depth_pair, enumerate_r, expand_r, x_count, CosetRep, Valuation, XClassKind,
};
use gl3branch::oracle::relations::{coset_pair_relations_check, RelationFamily};
use gl3branch::oracle::report::{default_pairs, verify_report, Status, VerifyOptions};
use gl3branch::oracle::ring::ResidueRing;
use gl3branch::polyq::QPoly;
use gl3branch::poset::{enumerate_tm, Bound, ConductorData, Triple};
use gl3branch::support::{count_s, dim_u, dim_v, intertwine_v, supported_reps, supports};

use super::*;

pub type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

pub fn table(m: ConductorData, bound: Bound, expected: Vec<(Triple, QPoly)>) -> Check {
    let rows = table_rows(&m, bound, None).map_err(err)?;
    ensure(rows.len() == expected.len(), || {
        format!("{} rows, expected {}", rows.len(), expected.len())
    })?;
    let got: BTreeMap<_, _> = rows.into_iter().map(|r| (r.triple, r.dim_poly)).collect();
    for (c, want) in &expected {
        match got.get(c) {
            Some(have) if have == want => {}
            Some(have) => return Err(format!("dim V{c} = {have}, expected {want}")),
            None => return Err(format!("{c} missing")),
        }
    }
    Ok(format!("{} rows match", expected.len()))
}

pub fn figure(
    m: ConductorData,
    bound: Bound,
    labels: Vec<(Triple, QPoly)>,
    equivalences: Vec<(Triple, Triple)>,
) -> Check {
    let d = build_diagram(&m, bound).map_err(err)?;
    ensure(d.nodes.len() == labels.len(), || {
        format!("{} nodes, expected {}", d.nodes.len(), labels.len())
    })?;
    let got: BTreeMap<_, _> = d.nodes.into_iter().map(|n| (n.triple, n.i_vv)).collect();
    for (c, want) in &labels {
        match got.get(c) {
            Some(have) if have == want => {}
            Some(have) => return Err(format!("I(V,V) at {c} = {have}, expected {want}")),
            None => return Err(format!("{c} missing")),
        }
    }
    let eq: BTreeSet<_> = d.equivalences.into_iter().collect();
    let want: BTreeSet<_> = equivalences.into_iter().collect();
    ensure(eq == want, || format!("equivalences {eq:?}, expected {want:?}"))?;
    Ok(format!("{} labels, {} equivalence edges", labels.len(), want.len()))
}

fn is_one(c: Triple, m: &ConductorData) -> Result<(), String> {
    let v = intertwine_v(c, c, m).map_err(err)?.i_vv;
    ensure(v.is_one(), || format!("I(V,V) at {c} = {v} for m = {}", m.base()))
}

/// Irreducibility theorems and the two reducible closed forms.
pub fn theorem_grid() -> Check {
    let mut checked = 0;
    for big_n in 1..=3u32 {
        for big_m in 0..=big_n {
            let m = ConductorData::new(big_m, big_n).unwrap();
            for n in big_n..=big_n + big_m {
                is_one(t(big_m, big_n, n), &m)?;
                checked += 1;
            }
            for a in big_m..=big_m + 2 {
                for b in big_n..=big_n + 2 {
                    is_one(t(a, b, a + b), &m)?;
                    checked += 1;
                    if a > big_m && b > big_n {
                        is_one(t(a, b, a.max(b)), &m)?;
                        checked += 1;
                    }
                }
            }
            for n in big_n + 1..=big_n + 2 {
                is_one(t(n, n, n), &m)?;
                checked += 1;
            }
            for n in big_n + 1..=big_n + big_m + 2 {
                let want = if n < big_m + big_n { n - big_n + 1 } else { big_m + 1 };
                let c = t(big_m, n, n);
                let v = intertwine_v(c, c, &m).map_err(err)?.i_vv;
                ensure(v == QPoly::constant(want.into()), || {
                    format!("I(V,V) at {c} = {v}, closed form {want}, m = {}", m.base())
                })?;
                checked += 1;
            }
            for n in big_n..=2 * big_n + 2 {
                let want = if n < 2 * big_n { n - big_n + 1 } else { big_n + 1 };
                let c = t(n, big_n, n);
                let v = intertwine_v(c, c, &m).map_err(err)?.i_vv;
                ensure(v == QPoly::constant(want.into()), || {
                    format!("I(V,V) at {c} = {v}, closed form {want}, m = {}", m.base())
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} triples across 9 conductor pairs"))
}

pub fn oracle_level_one() -> Check {
    let mut pairs = 0;
    for (mm, nn) in [(0, 1), (1, 1)] {
        let m = ConductorData::new(mm, nn).unwrap();
        let opts = VerifyOptions { fallback_to_sampled: false, ..VerifyOptions::default() };
        let r = verify_report(5, 1, &m, &default_pairs(&m, 1), &opts).map_err(err)?;
        if let Some(bad) = r.pairs.iter().find(|p| p.status != Status::Pass) {
            return Err(format!("m = {}: {bad:?}", m.base()));
        }
        pairs += r.pairs.len();
    }
    Ok(format!("{pairs} pairs, exact mode, zero mismatches"))
}

pub fn oracle_level_two() -> Check {
    let top = t(2, 2, 2);
    let mid = t(1, 1, 2);
    let mut notes = Vec::new();
    let mut top_count = 0;
    for (mm, nn) in [(1, 1), (2, 2)] {
        let m = ConductorData::new(mm, nn).unwrap();
        let pairs: Vec<_> = [(top, top), (mid, mid), (top, mid)]
            .into_iter()
            .filter(|(c, d)| c.in_tm(&m) && d.in_tm(&m))
            .collect();
        let opts = VerifyOptions { fallback_seed: 2024, ..VerifyOptions::default() };
        let r = verify_report(5, 2, &m, &pairs, &opts).map_err(err)?;
        for p in &r.pairs {
            ensure(p.status == Status::Pass, || {
                format!("m = {}: {p:?}", m.base())
            })?;
            if (p.c, p.d) == (top, top) {
                top_count = p.oracle_r;
            }
            let mode = if p.probabilistic { "sampled" } else { "exact" };
            notes.push(format!("{}{}{}:R={},S={} {mode}", m.base(), p.c, p.d, p.oracle_r, p.oracle_s));
        }
    }
    ensure(top_count == 18, || format!("{top_count} double cosets for (2,2,2), expected 18"))?;
    Ok(notes.join("; "))
}

/// `c <= c'`, `d <= d'` keeps every supported representative supported.
pub fn monotonicity(m: &ConductorData, bound: Bound) -> Result<usize, String> {
    let tm = enumerate_tm(m, bound);
    let mut checked = 0;
    let mut cache: HashMap<(Triple, Triple), Vec<CosetRep>> = HashMap::new();
    for &c in &tm {
        for &d in &tm {
            let reps = supported_reps(c, d, m).map_err(err)?;
            for &c2 in tm.iter().filter(|x| c.leq(**x)) {
                for &d2 in tm.iter().filter(|x| d.leq(**x)) {
                    for rep in &reps {
                        let all = cache.entry((c2, d2)).or_insert_with(|| enumerate_r(c2, d2));
                        let lifted = match lift(rep, all) {
                            Some(r) => r,
                            None => return Err(format!("{rep} of ({c},{d}) has no image in ({c2},{d2})")),
                        };
                        let ok = supports(&lifted, c2, d2, m).map_err(err)?.supported;
                        ensure(ok, || format!("{rep} supported for ({c},{d}) but not ({c2},{d2})"))?;
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(checked)
}

/// The label of `rep` for a larger pair: the same Weyl data, and for the
/// identity family the stratum with the same `val(x - 1)`.
fn lift(rep: &CosetRep, all: &[CosetRep]) -> Option<CosetRep> {
    match *rep {
        CosetRep::T { a, x } => all.iter().copied().find(|r| match r {
            CosetRep::T { a: a2, x: x2 } => *a2 == a && x2.kind == x.kind && x2.val_x_minus_1 == x.val_x_minus_1,
            _ => false,
        }),
        other => all.iter().copied().find(|r| *r == other),
    }
}

pub fn symmetry(m: &ConductorData, bound: Bound) -> Result<usize, String> {
    let tm = enumerate_tm(m, bound);
    let mut n = 0;
    for &c in &tm {
        for &d in &tm {
            let (a, b) = (count_s(c, d, m).map_err(err)?, count_s(d, c, m).map_err(err)?);
            ensure(a == b, || format!("count_S({c},{d}) = {a} but count_S({d},{c}) = {b}"))?;
            n += 1;
        }
    }
    Ok(n)
}

pub fn telescoping(m: &ConductorData, bound: Bound) -> Result<usize, String> {
    let tm = enumerate_tm(m, bound);
    for &c in &tm {
        let below: QPoly = enumerate_tm(m, Bound::ComponentwiseMax(c))
            .into_iter()
            .map(|d| dim_v(d, m))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?
            .into_iter()
            .sum();
        let u = dim_u(c, m).map_err(err)?;
        ensure(below == u, || format!("sum of dim V below {c} = {below}, dim U = {u}"))?;
    }
    Ok(tm.len())
}

pub fn nonnegativity(m: &ConductorData, bound: Bound) -> Result<usize, String> {
    let tm = enumerate_tm(m, bound);
    let mut n = 0;
    for &c in &tm {
        let dv = dim_v(c, m).map_err(err)?;
        for &d in &tm {
            let v = intertwine_v(c, d, m).map_err(err)?.i_vv;
            for q0 in [5u64, 7, 9] {
                let x = v.eval(q0).map_err(err)?;
                ensure(x >= BigInt::from(0), || format!("I(V_{c},V_{d}) = {v} is {x} at q = {q0}"))?;
                n += 1;
            }
        }
        for q0 in [5u64, 7, 9] {
            let x = dv.eval(q0).map_err(err)?;
            ensure(x > BigInt::from(0), || format!("dim V{c} = {dv} is {x} at q = {q0}"))?;
        }
    }
    Ok(n)
}

pub fn depth_inequality(limit: u32) -> Result<usize, String> {
    let all: Vec<Triple> = (0..=limit)
        .flat_map(|a| (0..=limit).flat_map(move |b| (0..=limit).map(move |c| t(a, b, c))))
        .filter(|x| x.in_t())
        .collect();
    let mut n = 0;
    for &a in &all {
        for &c in &all {
            for &d in &all {
                let dp = depth_pair(a, c, d);
                ensure(dp.a_cd_prime >= dp.a_cd, || format!("a' < a for a={a}, c={c}, d={d}"))?;
                n += 1;
            }
        }
    }
    Ok(n)
}

fn val(x: u64, p: u64, cap: u32) -> u32 {
    if x == 0 {
        return cap;
    }
    let (mut x, mut v) = (x, 0);
    while x % p == 0 && v < cap {
        x /= p;
        v += 1;
    }
    v
}

/// Classes of `X^a_{c,d}` counted directly from residues: `x ~ y` when they
/// share `i = min(val(x - 1), k')` and agree modulo `p^min(i + k, k')`, or
/// modulo `p^k` when `a1 + a2 != a3`.
fn enumerated_classes(a: Triple, c: Triple, d: Triple, p: u64, bound: Option<u32>) -> usize {
    let dp = depth_pair(a, c, d);
    let (k, kp) = (dp.a_cd, dp.a_cd_prime);
    if a.c1() + a.c2() != a.c3() {
        return (0..p.pow(k)).filter(|x| k == 0 || x % p != 0).count();
    }
    if kp == 0 {
        return 1;
    }
    let top = kp + 1;
    let modulus = p.pow(top);
    let mut classes = HashSet::new();
    for x in (1..modulus).filter(|x| x % p != 0) {
        let v = val(x - 1, p, top);
        if bound.is_some_and(|b| v > b) {
            continue;
        }
        let i = v.min(kp);
        classes.insert((i, x % p.pow((i + k).min(kp))));
    }
    classes.len()
}

pub fn x_count_enumeration(p: u64) -> Result<usize, String> {
    let mut n = 0;
    let tops = [t(4, 4, 4), t(3, 4, 4), t(4, 3, 4), t(2, 3, 4), t(3, 3, 3), t(2, 2, 4)];
    for &c in &tops {
        for &d in &tops {
            for a in gl3branch::cosets::tcd_set(c, d) {
                if a.c3() > 4 {
                    continue;
                }
                let want = enumerated_classes(a, c, d, p, None);
                let have = x_count(a, c, d, None).eval(p).map_err(err)?;
                ensure(have == want.into(), || {
                    format!("x_count({a},{c},{d}) = {have} at q = {p}, enumeration gives {want}")
                })?;
                let kp = depth_pair(a, c, d).a_cd_prime;
                if a.c1() + a.c2() == a.c3() && kp > 0 {
                    for b in 0..kp {
                        let want = enumerated_classes(a, c, d, p, Some(b));
                        let have = x_count(a, c, d, Some(i64::from(b))).eval(p).map_err(err)?;
                        ensure(have == want.into(), || {
                            format!("x_count({a},{c},{d},{b}) = {have}, enumeration gives {want}")
                        })?;
                    }
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

/// Support for `c = d = (n,n,n)` in the restated form.
fn restated_support(rep: &CosetRep, n: u32, m: &ConductorData) -> bool {
    let (big_m, big_n, n) = (i64::from(m.m), i64::from(m.n), i64::from(n));
    match *rep {
        CosetRep::T { a, x } => {
            let (a1, a2, a3) = (a.s(0), a.s(1), a.s(2));
            if !(1 <= a1 && 1 <= a2 && a1 <= a3 && a2 <= a3 && a3 <= n) {
                return false;
            }
            let val_rx = match (x.kind, x.val_x_minus_1) {
                (XClassKind::OnePlusPiClass, Some(Valuation::Finite(i))) => Some(a3 + i64::from(i)),
                _ => None,
            };
            let cases = |bound: i64| {
                (a1 + a2 < a3 && a3 <= n - bound)
                    || (a1 + a2 > a3 && a1 + a2 >= bound - n + 2 * a3)
                    || (a1 + a2 == a3 && a3 <= n - bound && val_rx.is_some_and(|v| v <= n - bound))
            };
            (a1 >= big_m && a2 >= big_n && a3 >= big_n)
                || (a1 < big_m && a2 >= big_n && cases(big_m))
                || (a1 >= big_n && a2 < big_n && cases(big_n))
        }
        CosetRep::S1 { alpha, beta } => {
            let (al, be) = (i64::from(alpha), i64::from(beta));
            big_n <= al.min(be) && al.max(be) <= n - big_m
        }
        CosetRep::S2 { alpha, beta } => {
            let (al, be) = (i64::from(alpha), i64::from(beta));
            big_n <= al.min(be) && al.max(be) <= n - big_n
        }
        _ => false,
    }
}

pub fn diagonal_specialization() -> Result<usize, String> {
    let mut n_checked = 0;
    for big_n in 1..=3u32 {
        for big_m in 0..=big_n {
            let m = ConductorData::new(big_m, big_n).unwrap();
            for n in big_n..=big_n + 4 {
                let c = t(n, n, n);
                for rep in enumerate_r(c, c) {
                    let have = supports(&rep, c, c, &m).map_err(err)?.supported;
                    let want = restated_support(&rep, n, &m);
                    ensure(have == want, || {
                        format!("{rep} at c = {c}, m = {}: decided {have}, restated form {want}", m.base())
                    })?;
                    n_checked += 1;
                }
            }
        }
    }
    Ok(n_checked)
}

fn property_grid() -> Vec<(ConductorData, Bound)> {
    let mut out = Vec::new();
    for big_n in 1..=3u32 {
        for big_m in 0..=big_n {
            let m = ConductorData::new(big_m, big_n).unwrap();
            out.push((m, Bound::SumMax(big_m + 2 * big_n + 4)));
        }
    }
    out
}

pub fn property_suites() -> Check {
    let mut mono = 0;
    let mut sym = 0;
    let mut tele = 0;
    let mut pos = 0;
    for (m, b) in property_grid() {
        mono += monotonicity(&m, b)?;
        sym += symmetry(&m, b)?;
        tele += telescoping(&m, b)?;
        pos += nonnegativity(&m, b)?;
    }
    let depth = depth_inequality(4)?;
    let xs = x_count_enumeration(5)?;
    let diag = diagonal_specialization()?;
    Ok(format!(
        "monotone {mono}, symmetric {sym}, telescoping {tele}, nonnegative {pos}, depth {depth}, x-classes {xs}, diagonal {diag}"
    ))
}

pub fn relation_checks(samples: u64) -> Check {
    let mut reps = 0;
    for (level, cs) in [(1u32, vec![t(1, 1, 1), t(0, 1, 1)]), (2, vec![t(2, 2, 2), t(1, 1, 2), t(1, 2, 2)])] {
        let ring = ResidueRing::new(5, level).map_err(err)?;
        for &c in &cs {
            for &d in &cs {
                for rep in expand_r(c, d, 5) {
                    let family = match rep {
                        CosetRep::S1 { .. } => RelationFamily::S1,
                        CosetRep::T { .. } => RelationFamily::TFamily,
                        _ => continue,
                    };
                    let r = coset_pair_relations_check(family, &rep, c, d, &ring, samples, 11)
                        .map_err(err)?;
                    ensure(r.pass, || format!("{} failures for {rep} at ({c},{d}), level {level}", r.failures))?;
                    reps += 1;
                }
            }
        }
    }
    Ok(format!("{samples} pairs for each of {reps} representatives"))
}

