use super::context::{PairCtx, PsrCtx, RingCtx};
use super::{Body, Rule, TheoremCheck};
use crate::analysis::{complements_of, least_nonzero, primitive_decomposition, zero_divisors};
use crate::constructions::{
    adjoin_z1, adjoin_z2_chain, adjoin_z2_incomparable, boolean_power, direct_product, lower_part,
    recognize_small_z, split_two_star, trivial, Decomposition, SmallZ, USquare,
};
use crate::elemset::Elem;
use crate::graphs::ShapeTag;
use crate::ideals::{is_ideal, lower_ideal};
use crate::iso::{find_isomorphism, transports};
use crate::table::PoSemiringTable;

const FINITE: &[&str] = &["finite-case"];

/// Results deliberately left out, with the reason.
pub const NOT_COVERED: &[(&str, &str)] = &[
    (
        "C2.4",
        "ring-theoretic hypotheses (exchange rings, non-nilpotent ideals) with no content beyond Prop1.2 and C2.5 on finite rings",
    ),
    (
        "C2.12",
        "statements about noetherian rings whose content is infinite; finite rings are semilocal trivially",
    ),
    (
        "C2.14",
        "chain conditions on ideals hold vacuously on finite instances; the order embedding behind it is P2.13",
    ),
    (
        "C2.15",
        "specialization of P2.13 to ideal semirings; chain conditions are vacuous on finite rings",
    ),
];

pub fn catalog() -> &'static [TheoremCheck] {
    CATALOG
}

pub fn find_check(id: &str) -> Option<&'static TheoremCheck> {
    CATALOG.iter().find(|c| c.id == id)
}

fn always<C>(_: &C) -> Result<(), String> {
    Ok(())
}

fn once<C>(_: &C) -> Vec<Vec<Elem>> {
    vec![vec![]]
}

fn require(ok: bool, why: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why.to_string())
    }
}

fn hyp_c1(c: &PsrCtx) -> Result<(), String> {
    require(c.conditions.c1(), "condition (C1) fails")
}

fn hyp_c2(c: &PsrCtx) -> Result<(), String> {
    require(c.conditions.c2(), "condition (C2) fails")
}

fn hyp_c3(c: &PsrCtx) -> Result<(), String> {
    require(c.conditions.c3(), "condition (C3) fails")
}

fn hyp_nonempty_z(c: &PsrCtx) -> Result<(), String> {
    require(c.z_count() > 0, "no zero divisors")
}

fn interior(c: &PsrCtx) -> impl Iterator<Item = Elem> + '_ {
    (1..c.order()).filter(move |&x| x != c.a.one())
}

fn singletons(xs: impl Iterator<Item = Elem>) -> Vec<Vec<Elem>> {
    xs.map(|x| vec![x]).collect()
}

fn z_squared_nonzero(c: &PsrCtx) -> bool {
    let z = c.analysis.zero_divisors.to_vec();
    z.iter().any(|&x| z.iter().any(|&y| c.a.mul(x, y) != 0))
}

fn is_boolean_square(a: &PoSemiringTable) -> bool {
    a.order() == 4 && find_isomorphism(&boolean_power(2).expect("small power"), a).is_some()
}

// Maximal elements.

fn max_domain(c: &PsrCtx) -> Vec<Vec<Elem>> {
    singletons(c.analysis.maximals.iter())
}

fn p21a(c: &PsrCtx, t: &[Elem]) -> bool {
    c.analysis.primes.contains(t[0])
}

fn p21b_domain(c: &PsrCtx) -> Vec<Vec<Elem>> {
    c.analysis
        .maximals
        .iter()
        .flat_map(|m| {
            c.a.elements()
                .filter(move |&b| c.a.mul(m, b) == 0)
                .map(move |b| vec![m, b])
        })
        .collect()
}

fn p21b(c: &PsrCtx, t: &[Elem]) -> bool {
    let (m, b) = (t[0], t[1]);
    c.a.mul(m, m) == m || c.a.mul(b, b) == 0
}

fn complement_pairs(c: &PsrCtx) -> Vec<(Elem, Elem)> {
    let a = &c.a;
    a.elements()
        .filter(|&e| a.is_idempotent(e))
        .flat_map(|e| {
            complements_of(a, e, a.one())
                .into_iter()
                .map(move |f| (e, f))
        })
        .collect()
}

fn p21c_domain(c: &PsrCtx) -> Vec<Vec<Elem>> {
    let pairs = complement_pairs(c);
    pairs
        .iter()
        .flat_map(|&(e1, f1)| {
            pairs
                .iter()
                .filter(move |&&(e2, _)| c.a.lt(e2, e1))
                .map(move |&(e2, f2)| vec![e1, f1, e2, f2])
        })
        .collect()
}

fn p21c(c: &PsrCtx, t: &[Elem]) -> bool {
    c.a.lt(t[1], t[3])
}

// Zero divisors and idempotents.

fn interior_domain(c: &PsrCtx) -> Vec<Vec<Elem>> {
    singletons(interior(c))
}

fn t22(c: &PsrCtx, t: &[Elem]) -> bool {
    c.in_z(t[0])
}

fn t22_tail(c: &PsrCtx, t: &[Elem]) -> bool {
    let a = &c.a;
    let x = t[0];
    if c.analysis.is_nilpotent(x) {
        return true;
    }
    let split: Vec<Elem> = c
        .analysis
        .idempotents
        .iter()
        .filter(|&e| e != a.one() && !complements_of(a, e, a.one()).is_empty())
        .collect();
    (1..=a.order()).any(|k| {
        let p = a.pow(x, k);
        split.iter().any(|&e| a.mul(p, e) == p)
    })
}

fn idempotent_domain(c: &PsrCtx) -> Vec<Vec<Elem>> {
    singletons(c.a.elements().filter(|&e| c.a.is_idempotent(e)))
}

fn t23(c: &PsrCtx, t: &[Elem]) -> bool {
    let a = &c.a;
    let e = t[0];
    if complements_of(a, e, a.one()).is_empty() {
        return false;
    }
    if e != 0 && e != a.one() && !c.in_z(e) {
        return false;
    }
    if e == 0 {
        return true;
    }
    match primitive_decomposition(a, e) {
        Ok(parts) => {
            parts
                .iter()
                .all(|&p| c.analysis.primitive_idempotents.contains(p))
                && parts
                    .iter()
                    .enumerate()
                    .all(|(i, &p)| parts[i + 1..].iter().all(|&q| a.mul(p, q) == 0))
                && a.sum(parts.iter().copied()) == e
        }
        Err(_) => false,
    }
}

fn prime_domain(c: &PsrCtx) -> Vec<Vec<Elem>> {
    singletons(c.analysis.primes.iter())
}

fn t27(c: &PsrCtx, t: &[Elem]) -> bool {
    c.analysis.maximals.contains(t[0])
}

fn hyp_full_z(c: &PsrCtx) -> Result<(), String> {
    require(
        interior(c).all(|x| c.in_z(x)),
        "some element outside {0, 1} is not a zero divisor",
    )
}

fn t29_domain(c: &PsrCtx) -> Vec<Vec<Elem>> {
    let m = c.analysis.maximals.to_vec();
    let mut out = Vec::new();
    for (i, &x) in m.iter().enumerate() {
        out.push(vec![2, x]);
        for &y in &m[i + 1..] {
            out.push(vec![0, x, y]);
        }
    }
    for (i, &x) in m.iter().enumerate() {
        for (j, &y) in m.iter().enumerate().skip(i + 1) {
            for (k, &w) in m.iter().enumerate() {
                if k != i && k != j {
                    out.push(vec![1, x, y, w]);
                    out.push(vec![3, x, y, w]);
                }
            }
        }
        for (k, &w) in m.iter().enumerate() {
            if k != i {
                out.push(vec![3, x, w]);
            }
        }
    }
    out
}

/// Tags: 0 `m1 + m2 = 1`; 1 `m3 + m1 m2 = 1`; 2 `ann(m) != 0`;
/// 3 `ann(m1 ... mk)` meets `ann(m)` only in zero.
fn t29(c: &PsrCtx, t: &[Elem]) -> bool {
    let a = &c.a;
    let one = a.one();
    match t[0] {
        0 => a.add(t[1], t[2]) == one,
        1 => a.add(t[3], a.mul(t[1], t[2])) == one,
        2 => (1..a.order()).any(|x| a.mul(x, t[1]) == 0),
        _ => {
            let (&m, init) = t[1..].split_last().expect("tag 3 has factors");
            let p = a.product(init.iter().copied());
            (1..a.order()).all(|x| a.mul(x, p) != 0 || a.mul(x, m) != 0)
        }
    }
}

fn c210_domain(c: &PsrCtx) -> Vec<Vec<Elem>> {
    c.a.elements()
        .map(|x| vec![0, x])
        .chain(interior(c).map(|x| vec![1, x]))
        .collect()
}

fn c210(c: &PsrCtx, t: &[Elem]) -> bool {
    match t[0] {
        0 => c.analysis.primes.contains(t[1]) == c.analysis.maximals.contains(t[1]),
        _ => c.in_z(t[1]),
    }
}

fn c211_domain(c: &PsrCtx) -> Vec<Vec<Elem>> {
    if c.analysis.maximals.len() == 1 {
        max_domain(c)
    } else {
        Vec::new()
    }
}

fn c211(c: &PsrCtx, t: &[Elem]) -> bool {
    c.analysis.is_nilpotent(t[0])
}

// Ideals.

fn pair_domain(c: &PsrCtx) -> Vec<Vec<Elem>> {
    c.a.elements()
        .flat_map(|u| c.a.elements().map(move |v| vec![u, v]))
        .collect()
}

fn p213(c: &PsrCtx, t: &[Elem]) -> bool {
    let (u, v) = (t[0], t[1]);
    let (lu, lv) = (c.lower_set(u), c.lower_set(v));
    let sub = lu.is_subset(lv);
    let ok = c.a.leq(u, v) == sub && c.a.lt(u, v) == (sub && lu != lv);
    if u != v {
        return ok;
    }
    ok && is_ideal(&c.a, lu) && lower_ideal(&c.a, u).hereditary
}

fn all_elements(c: &PsrCtx) -> Vec<Vec<Elem>> {
    singletons(c.a.elements())
}

fn p216(c: &PsrCtx, t: &[Elem]) -> bool {
    c.analysis.primes.contains(t[0]) == lower_ideal(&c.a, t[0]).prime
}

// Zero-divisor graphs.

fn hyp_t31(c: &PsrCtx) -> Result<(), String> {
    require(!c.analysis.is_integral(), "integral")?;
    hyp_c2(c)
}

fn t31(c: &PsrCtx, _: &[Elem]) -> bool {
    c.graph.vertex_count() == c.order() - 2
}

fn l33a(c: &PairCtx, _: &[Elem]) -> bool {
    let free = !c.product.graph.contains_triangle();
    let side = (c.left_z == 0 && c.right_z <= 1) || (c.right_z == 0 && c.left_z <= 1);
    free == side
}

fn l33b(c: &PairCtx, _: &[Elem]) -> bool {
    let acyclic =
        c.product.graph.edge_count() + component_count(c) == c.product.graph.vertex_count();
    let side = (c.left.order() == 2 && c.right_z <= 1) || (c.right.order() == 2 && c.left_z <= 1);
    acyclic == side
}

fn component_count(c: &PairCtx) -> usize {
    c.product.shape.component_count
}

fn l33c(c: &PairCtx, _: &[Elem]) -> bool {
    let free = !c.product.graph.contains_quadrilateral();
    let other_ok = |z: usize, nil: bool| z <= 1 || (z == 2 && !nil);
    let side = (c.left.order() == 2 && other_ok(c.right_z, c.right_nilpotent))
        || (c.right.order() == 2 && other_ok(c.left_z, c.left_nilpotent));
    free == side
}

fn l34a_domain(c: &PsrCtx) -> Vec<Vec<Elem>> {
    let g = &c.graph;
    let mut out = Vec::new();
    for (ui, &u) in g.vertices.iter().enumerate() {
        let nb: Vec<Elem> = g.neighbors(ui).map(|i| g.vertices[i]).collect();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                out.push(vec![x, u, y]);
            }
        }
    }
    out
}

fn l34a(c: &PsrCtx, t: &[Elem]) -> bool {
    let (x, u, y) = (t[0], t[1], t[2]);
    c.adjacent(x, y)
        || c.graph
            .vertices
            .iter()
            .any(|&v| v != u && v != x && v != y && c.adjacent(v, x) && c.adjacent(v, y))
        || c.analysis.minimals.contains(u)
}

fn l34b_domain(c: &PsrCtx) -> Vec<Vec<Elem>> {
    let mut out: Vec<Vec<Elem>> = c.analysis.minimals.iter().map(|m| vec![0, m]).collect();
    out.push(vec![1]);
    out
}

fn l34b(c: &PsrCtx, t: &[Elem]) -> bool {
    match t[0] {
        0 => c.in_z(t[1]),
        _ => c.shape.clique_number >= c.analysis.minimals.len(),
    }
}

fn l34c_domain(c: &PsrCtx) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    for u in c.analysis.minimals.iter() {
        for &x in &c.graph.vertices {
            out.push(vec![0, u, x]);
        }
        for k in c.cliques() {
            let mut t = vec![1, u];
            t.extend_from_slice(k);
            out.push(t);
        }
    }
    out
}

/// Tag 0: `d(u, x) <= 2`. Tag 1: all but at most one clique vertex lie
/// in `N(u)`.
fn l34c(c: &PsrCtx, t: &[Elem]) -> bool {
    let u = t[1];
    match t[0] {
        0 => {
            let x = t[2];
            x == u
                || c.adjacent(u, x)
                || c.graph
                    .vertices
                    .iter()
                    .any(|&w| c.adjacent(u, w) && c.adjacent(w, x))
        }
        _ => t[2..].iter().filter(|&&v| !c.adjacent(u, v)).count() <= 1,
    }
}

fn hyp_t35a(c: &PsrCtx) -> Result<(), String> {
    hyp_c3(c)?;
    require(c.graph.vertex_count() > 0, "empty graph")?;
    require(
        c.graph.edge_count() + c.shape.component_count == c.graph.vertex_count(),
        "graph has a cycle",
    )
}

fn t35a(c: &PsrCtx, _: &[Elem]) -> bool {
    matches!(
        c.shape.tag,
        ShapeTag::SingleVertex
            | ShapeTag::Complete { n: 2 }
            | ShapeTag::Star { .. }
            | ShapeTag::TwoStar { r: 1, .. }
    )
}

/// `|S|` for a decomposition `A = {0,1} x S` with `|Z(S)| = 1`, found by
/// trying every idempotent atom and its complements.
fn boolean_times_small_z(c: &PsrCtx) -> Option<usize> {
    let a = &c.a;
    let atoms: Vec<Elem> = c
        .analysis
        .idempotents
        .iter()
        .filter(|&e| c.analysis.minimals.contains(e))
        .collect();
    atoms.into_iter().find_map(|e| {
        complements_of(a, e, a.one())
            .into_iter()
            .filter(|&f| f != 0)
            .find_map(|f| {
                let s = lower_part(a, f).ok()?;
                (zero_divisors(&s).len() == 1
                    && find_isomorphism(&direct_product(&trivial(), &s), a).is_some())
                .then(|| s.order())
            })
    })
}

fn t35b(c: &PsrCtx, _: &[Elem]) -> bool {
    let found = boolean_times_small_z(c);
    match c.shape.tag {
        ShapeTag::TwoStar { r: 1, s } => {
            found == Some(s + 2)
                && match split_two_star(&c.a) {
                    Ok(d @ Decomposition::TwoStarSplit { r, .. }) => {
                        r == s && transports(&d.rebuild(), &c.a, d.iso())
                    }
                    _ => false,
                }
        }
        _ => found.is_none(),
    }
}

fn c38_domain(c: &PsrCtx) -> Vec<Vec<Elem>> {
    if hyp_t35a(c).is_ok() {
        vec![vec![0], vec![1]]
    } else {
        vec![vec![1]]
    }
}

fn c38(c: &PsrCtx, t: &[Elem]) -> bool {
    match t[0] {
        0 => matches!(
            c.shape.tag,
            ShapeTag::SingleVertex
                | ShapeTag::Complete { n: 2 }
                | ShapeTag::Star { .. }
                | ShapeTag::TwoStar { r: 1, s: 1 }
        ),
        _ => {
            let nil_chain = adjoin_z1(&trivial()).expect("two-element base is integral");
            let target = direct_product(&trivial(), &nil_chain);
            let iso = c.order() == 6 && find_isomorphism(&target, &c.a).is_some();
            (c.shape.tag == ShapeTag::TwoStar { r: 1, s: 1 }) == iso
        }
    }
}

// Small zero-divisor sets.

fn hyp_z1(c: &PsrCtx) -> Result<(), String> {
    require(c.z_count() == 1, "|Z(A)| != 1")
}

fn hyp_z2(c: &PsrCtx) -> Result<(), String> {
    require(c.z_count() == 2, "|Z(A)| != 2")
}

fn l41a(c: &PsrCtx, _: &[Elem]) -> bool {
    let z = c.analysis.zero_divisors.to_vec()[0];
    c.a.mul(z, z) == 0 && least_nonzero(&c.a) == Some(z) && c.analysis.primes.contains(z)
}

fn l41b(c: &PsrCtx, _: &[Elem]) -> bool {
    let a = &c.a;
    let an = &c.analysis;
    let z = an.zero_divisors.to_vec();
    let (c0, u0) = (z[0], z[1]);
    let both_atoms = an.minimals.contains(c0)
        && an.minimals.contains(u0)
        && a.elements()
            .filter(|&x| x != 0 && x != c0 && x != u0)
            .all(|x| a.lt(c0, x) && a.lt(u0, x))
        && a.is_idempotent(c0)
        && a.is_idempotent(u0)
        && an.primes.contains(c0)
        && an.primes.contains(u0);
    let chain = |c0: Elem, u0: Elem| {
        least_nonzero(a) == Some(c0)
            && a.mul(c0, c0) == 0
            && an.primes.contains(u0)
            && an
                .primes
                .iter()
                .filter(|&p| p != c0 && p != u0)
                .all(|p| a.lt(u0, p))
    };
    both_atoms != (chain(c0, u0) || chain(u0, c0))
}

fn t42a_domain(c: &PsrCtx) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    if c.z_count() == 1 {
        out.push(vec![0]);
    }
    if c.analysis.is_integral() {
        out.push(vec![1]);
    }
    out
}

fn recovers(b: &PoSemiringTable, a: &PoSemiringTable, want: fn(&Decomposition) -> bool) -> bool {
    match recognize_small_z(b) {
        Ok(SmallZ::Decomposed(d)) => {
            let base = match &d {
                Decomposition::Z1 { a1, .. }
                | Decomposition::Z2Incomparable { a1, .. }
                | Decomposition::Z2Chain { a1, .. } => a1,
                _ => return false,
            };
            want(&d) && find_isomorphism(base, a).is_some()
        }
        _ => false,
    }
}

fn rebuilt_integral(c: &PsrCtx, want: fn(&Decomposition) -> bool) -> bool {
    match c.small_z() {
        Ok(SmallZ::Decomposed(d)) => {
            let base_integral = match d {
                Decomposition::Z1 { a1, .. }
                | Decomposition::Z2Incomparable { a1, .. }
                | Decomposition::Z2Chain { a1, .. } => zero_divisors(a1).is_empty(),
                _ => false,
            };
            want(d) && base_integral && transports(&d.rebuild(), &c.a, d.iso())
        }
        _ => false,
    }
}

fn is_z1(d: &Decomposition) -> bool {
    matches!(d, Decomposition::Z1 { .. })
}

fn is_z2(d: &Decomposition) -> bool {
    matches!(
        d,
        Decomposition::Z2Incomparable { .. } | Decomposition::Z2Chain { .. }
    )
}

fn is_z2_incomparable(d: &Decomposition) -> bool {
    matches!(d, Decomposition::Z2Incomparable { .. })
}

fn is_z2_chain_c(d: &Decomposition) -> bool {
    matches!(
        d,
        Decomposition::Z2Chain {
            u_square: USquare::C,
            ..
        }
    )
}

fn is_z2_chain_u(d: &Decomposition) -> bool {
    matches!(
        d,
        Decomposition::Z2Chain {
            u_square: USquare::U,
            ..
        }
    )
}

/// Tag 0: `|Z| = 1` instances rebuild from an integral base. Tag 1: the
/// one-point extension of an integral instance has `|Z| = 1` and gives the
/// base back.
fn t42a(c: &PsrCtx, t: &[Elem]) -> bool {
    match t[0] {
        0 => rebuilt_integral(c, is_z1),
        _ => match adjoin_z1(&c.a) {
            Ok(b) => zero_divisors(&b).len() == 1 && recovers(&b, &c.a, is_z1),
            Err(_) => false,
        },
    }
}

fn hyp_t42b(c: &PsrCtx) -> Result<(), String> {
    require(
        (c.z_count() == 2 && z_squared_nonzero(c)) || c.analysis.is_integral(),
        "neither integral nor |Z(A)| = 2 with Z(A)^2 != 0",
    )
}

fn t42b_domain(c: &PsrCtx) -> Vec<Vec<Elem>> {
    if !c.analysis.is_integral() {
        return vec![vec![0]];
    }
    let mut out = vec![vec![1], vec![2]];
    if least_nonzero(&c.a).is_some() {
        out.push(vec![3]);
    }
    out
}

fn two_point_ok(
    b: &PoSemiringTable,
    a: &PoSemiringTable,
    want: fn(&Decomposition) -> bool,
) -> bool {
    let z = zero_divisors(b).to_vec();
    z.len() == 2 && z.iter().any(|&x| z.iter().any(|&y| b.mul(x, y) != 0)) && recovers(b, a, want)
}

/// Tag 0: forward recognition. Tags 1, 2: chain extensions with `u^2 = c`
/// and `u^2 = u`. Tag 3: incomparable extension.
fn t42b(c: &PsrCtx, t: &[Elem]) -> bool {
    match t[0] {
        0 => rebuilt_integral(c, is_z2),
        1 => adjoin_z2_chain(&c.a, USquare::C).is_ok_and(|b| two_point_ok(&b, &c.a, is_z2_chain_c)),
        2 => adjoin_z2_chain(&c.a, USquare::U).is_ok_and(|b| two_point_ok(&b, &c.a, is_z2_chain_u)),
        _ => adjoin_z2_incomparable(&c.a).is_ok_and(|b| two_point_ok(&b, &c.a, is_z2_incomparable)),
    }
}

fn c43_domain(_: &PsrCtx) -> Vec<Vec<Elem>> {
    vec![vec![1], vec![2]]
}

fn c43(c: &PsrCtx, t: &[Elem]) -> bool {
    let square = is_boolean_square(&c.a);
    match t[0] {
        1 => {
            let chain = matches!(
                c.small_z(),
                Ok(SmallZ::Decomposed(Decomposition::Z2Chain { .. }))
            );
            (c.conditions.c3() && z_squared_nonzero(c)) == (square || chain)
        }
        _ => (c.conditions.c3() && !c.has_nilpotent()) == square,
    }
}

fn hyp_p45(c: &PsrCtx) -> Result<(), String> {
    hyp_z2(c)?;
    require(!z_squared_nonzero(c), "Z(A)^2 != 0")
}

fn c3_domain(_: &PsrCtx) -> Vec<Vec<Elem>> {
    vec![vec![0], vec![1]]
}

/// Tag 0: (C3) forces the listed conditions. Tag 1: the conditions force
/// (C3).
fn p45(c: &PsrCtx, t: &[Elem]) -> bool {
    let Ok(SmallZ::SquareZero(report)) = c.small_z() else {
        return false;
    };
    let listed = report.a1_integral && report.conditions.iter().all(|k| k.holds);
    match t[0] {
        0 => !c.conditions.c3() || listed,
        _ => !listed || c.conditions.c3(),
    }
}

/// Tag 0: peeling rebuilds the instance. Tag 1: every atom of the residue
/// squares to zero, unless the residue is `{0, 1}`.
fn p48(c: &PsrCtx, t: &[Elem]) -> bool {
    let d = match crate::constructions::peel_boolean(&c.a) {
        Ok(d) => d,
        Err(_) => return false,
    };
    let Decomposition::BooleanPeel { a1, .. } = &d else {
        return false;
    };
    match t[0] {
        0 => transports(&d.rebuild(), &c.a, d.iso()),
        _ => {
            a1.order() == 2
                || a1
                    .elements()
                    .filter(|&x| crate::analysis::is_minimal(a1, x))
                    .all(|x| a1.mul(x, x) == 0)
        }
    }
}

// Rings.

fn hyp_ideals(c: &RingCtx) -> Result<(), String> {
    c.semiring().map(|_| ())
}

fn prop12_domain(_: &RingCtx) -> Vec<Vec<Elem>> {
    vec![vec![0], vec![1], vec![2]]
}

/// Tag 0: `I(R)` satisfies (C3). Tag 1: (C1). Tag 2: `J(R) = N(R)`.
fn prop12(c: &RingCtx, t: &[Elem]) -> bool {
    let Ok((_, p)) = c.semiring() else {
        return false;
    };
    match t[0] {
        0 => p.conditions.c3(),
        1 => p.conditions.c1(),
        _ => c.radicals.jacobson.members == c.radicals.nilradical.members,
    }
}

fn c25_domain(c: &RingCtx) -> Vec<Vec<Elem>> {
    let Ok((_, p)) = c.semiring() else {
        return Vec::new();
    };
    let one = p.a.one();
    p.analysis
        .idempotents
        .iter()
        .flat_map(|i| {
            let tag0 = (i != one).then(|| vec![0, i]);
            tag0.into_iter().chain(std::iter::once(vec![1, i]))
        })
        .collect()
}

/// An idempotent ring element `e` with `I = Re`.
fn idempotent_generator(c: &RingCtx, members: &crate::elemset::ElemSet) -> Option<Elem> {
    let r = &c.ring;
    members
        .iter()
        .find(|&e| r.mul(e, e) == e && members.iter().all(|x| r.mul(x, e) == x))
}

/// Tag 0: a nontrivial idempotent ideal annihilates a nonzero ideal. Tag 1:
/// a nonzero idempotent ideal is `Re1 + ... + Rer` for orthogonal
/// primitive idempotents.
fn c25(c: &RingCtx, t: &[Elem]) -> bool {
    let Ok((is, p)) = c.semiring() else {
        return false;
    };
    let i = t[1];
    match t[0] {
        0 => p.in_z(i),
        _ => {
            let Ok(parts) = primitive_decomposition(&p.a, i) else {
                return false;
            };
            let gens: Option<Vec<Elem>> = parts
                .iter()
                .map(|&k| idempotent_generator(c, &is.ideals[k].members))
                .collect();
            let Some(gens) = gens else { return false };
            gens.iter()
                .enumerate()
                .all(|(x, &e)| gens[x + 1..].iter().all(|&f| c.ring.mul(e, f) == 0))
                && p.a.sum(parts.iter().copied()) == i
        }
    }
}

fn c28_domain(c: &RingCtx) -> Vec<Vec<Elem>> {
    match c.semiring() {
        Ok((_, p)) => prime_domain(p),
        Err(_) => Vec::new(),
    }
}

fn c28(c: &RingCtx, t: &[Elem]) -> bool {
    c.semiring()
        .is_ok_and(|(_, p)| p.analysis.maximals.contains(t[0]))
}

fn hyp_criteria(c: &RingCtx) -> Result<(), String> {
    c.criteria.as_ref().map(|_| ()).map_err(|e| e.to_string())
}

fn c44(c: &RingCtx, _: &[Elem]) -> bool {
    c.criteria.as_ref().is_ok_and(|k| k.agree())
}

macro_rules! psr {
    ($id:literal, $stmt:literal, $ann:expr, $hyp:expr, $dom:expr, $holds:expr) => {
        TheoremCheck {
            id: $id,
            statement: $stmt,
            annotations: $ann,
            body: Body::Posemiring(Rule {
                hypothesis: $hyp,
                domain: $dom,
                holds_at: $holds,
            }),
        }
    };
}

macro_rules! pair {
    ($id:literal, $stmt:literal, $holds:expr) => {
        TheoremCheck {
            id: $id,
            statement: $stmt,
            annotations: &[],
            body: Body::Pair(Rule {
                hypothesis: always,
                domain: once,
                holds_at: $holds,
            }),
        }
    };
}

macro_rules! ring {
    ($id:literal, $stmt:literal, $hyp:expr, $dom:expr, $holds:expr) => {
        TheoremCheck {
            id: $id,
            statement: $stmt,
            annotations: FINITE,
            body: Body::Ring(Rule {
                hypothesis: $hyp,
                domain: $dom,
                holds_at: $holds,
            }),
        }
    };
}

static CATALOG: &[TheoremCheck] = &[
    psr!("P2.1a", "every maximal element is prime", &[], always, max_domain, p21a),
    psr!(
        "P2.1b",
        "m maximal and mb = 0 give m^2 = m or b^2 = 0",
        &[],
        always,
        p21b_domain,
        p21b
    ),
    psr!(
        "P2.1c",
        "for complementary idempotent pairs, e1 > e2 gives f1 < f2",
        &[],
        always,
        p21c_domain,
        p21c
    ),
    psr!(
        "T2.2",
        "under (C2), every element other than 0 and 1 is a zero divisor",
        FINITE,
        hyp_c2,
        interior_domain,
        t22
    ),
    psr!(
        "T2.2-tail",
        "under (C2), each c is nilpotent or c^n = c^n e for a nontrivial complemented idempotent e",
        FINITE,
        hyp_c2,
        interior_domain,
        t22_tail
    ),
    psr!(
        "T2.3",
        "under (C2), idempotents are complemented, nontrivial ones are zero divisors, and split into orthogonal primitives",
        FINITE,
        hyp_c2,
        idempotent_domain,
        t23
    ),
    psr!("T2.7", "under (C2), every prime element is maximal", FINITE, hyp_c2, prime_domain, t27),
    psr!(
        "T2.9",
        "if Z(A) = A \\ {0,1}, maximal elements are comaximal and their annihilators separate",
        &["finite-case", "principal-annihilating-variant"],
        hyp_full_z,
        t29_domain,
        t29
    ),
    psr!(
        "C2.10",
        "under (C2), primes are exactly the maximal elements and Z(A) = A \\ {0,1}",
        FINITE,
        hyp_c2,
        c210_domain,
        c210
    ),
    psr!(
        "C2.11",
        "under (C1), a unique maximal element is nilpotent",
        FINITE,
        hyp_c1,
        c211_domain,
        c211
    ),
    psr!(
        "P2.13",
        "u -> <u> is an order embedding into hereditary ideals",
        FINITE,
        always,
        pair_domain,
        p213
    ),
    psr!("P2.16", "p is prime iff <p> is a prime ideal", &[], always, all_elements, p216),
    psr!(
        "T3.1",
        "under (C2) and non-integral, the graph has |A| - 2 vertices",
        FINITE,
        hyp_t31,
        once,
        t31
    ),
    pair!(
        "L3.3a",
        "the product graph is triangle-free iff one factor is integral and the other has at most one zero divisor",
        l33a
    ),
    pair!(
        "L3.3b",
        "the product graph is acyclic iff one factor is {0,1} and the other has at most one zero divisor",
        l33b
    ),
    pair!(
        "L3.3c",
        "the product graph is quadrilateral-free iff one factor is {0,1} and the other has |Z| <= 1, or |Z| = 2 without nilpotents",
        l33c
    ),
    psr!(
        "L3.4a",
        "a path a-u-b in no triangle or quadrilateral has u minimal",
        &[],
        hyp_nonempty_z,
        l34a_domain,
        l34a
    ),
    psr!(
        "L3.4b",
        "minimal elements are zero divisors and the clique number bounds their count",
        &[],
        hyp_nonempty_z,
        l34b_domain,
        l34b
    ),
    psr!(
        "L3.4c",
        "a minimal u is within distance 2 of every vertex and sees all but one vertex of each clique",
        &[],
        hyp_nonempty_z,
        l34c_domain,
        l34c
    ),
    psr!(
        "T3.5a",
        "under (C3), an acyclic graph is a star or a two-star K1+K1+K1+D_r",
        &[],
        hyp_t35a,
        once,
        t35a
    ),
    psr!(
        "T3.5b",
        "under (C3), the graph is K1+K1+K1+D_r iff A = {0,1} x S with |Z(S)| = 1, and r = |S| - 2",
        &[],
        hyp_c3,
        once,
        t35b
    ),
    psr!(
        "C3.8",
        "under (C1), acyclic graphs are stars or K1+K1+K1+K1, the latter iff A = {0,1} x {0,a,1} with a^2 = 0",
        FINITE,
        hyp_c1,
        c38_domain,
        c38
    ),
    psr!(
        "L4.1a",
        "Z(A) = {c} forces c^2 = 0, c least nonzero and prime",
        &[],
        hyp_z1,
        once,
        l41a
    ),
    psr!(
        "L4.1b",
        "Z(A) = {c, u} satisfies exactly one of the two-atom and chain descriptions",
        &[],
        hyp_z2,
        once,
        l41b
    ),
    psr!(
        "T4.2a",
        "|Z(A)| = 1 iff A is an integral po-semiring with one point adjoined below",
        &[],
        |c: &PsrCtx| {
            require(
                c.z_count() == 1 || c.analysis.is_integral(),
                "neither integral nor |Z(A)| = 1",
            )
        },
        t42a_domain,
        t42a
    ),
    psr!(
        "T4.2b",
        "|Z(A)| = 2 with Z(A)^2 != 0 iff A is an integral po-semiring with two points adjoined",
        &[],
        hyp_t42b,
        t42b_domain,
        t42b
    ),
    psr!(
        "C4.3",
        "with |Z(A)| = 2: (C3) and Z^2 != 0 iff {0,1}^2 or a chain extension; (C3) without nilpotents iff {0,1}^2",
        &[],
        hyp_z2,
        c43_domain,
        c43
    ),
    psr!(
        "P4.5",
        "with |Z(A)| = 2 and Z^2 = 0, (C3) holds iff A1 = A \\ Z(A) is integral and the extension conditions hold",
        &[],
        hyp_p45,
        c3_domain,
        p45
    ),
    psr!(
        "P4.8",
        "under (C3), A = {0,1}^n x A1 with every atom of A1 square-zero",
        &["finite-case", "terminal-two-element-residue"],
        hyp_c3,
        c3_domain,
        p48
    ),
    ring!(
        "Prop1.2",
        "I(R) satisfies (C3) and (C1), and J(R) = N(R)",
        hyp_ideals,
        prop12_domain,
        prop12
    ),
    ring!(
        "C2.5",
        "idempotent ideals are annihilating and sums of Re_i for orthogonal primitive idempotents",
        hyp_ideals,
        c25_domain,
        c25
    ),
    ring!(
        "C2.8",
        "prime ideals are maximal",
        hyp_ideals,
        c28_domain,
        c28
    ),
    ring!(
        "C4.4",
        "AG(R) = K2 iff R is a product of two fields or local with two nontrivial ideals iff J(R) = R alpha with alpha^3 = 0 != alpha^2",
        hyp_criteria,
        once,
        c44
    ),
];
