mod common;

use binmat::constructions::{
    ag, bose_burton, circuit, conical_lift, doubling, extremal_gs, extremal_odd_girth, pg, Family,
    FamilyParams, FamilySpec,
};
use binmat::{is_isomorphic, BinaryMatroid, OddGirth};
use common::{random_full_rank, rng};
use num_rational::Ratio;

/// `(1 - 11/2^(n+2))·2^r` as an exact rational.
fn gs_size(n: usize, r: usize) -> Ratio<i64> {
    (Ratio::from_integer(1) - Ratio::new(11, 1 << (n + 2))) * Ratio::from_integer(1 << r)
}

#[test]
fn size_identities_up_to_rank_eight() {
    for r in 1..=8usize {
        assert_eq!(pg(r).unwrap().len(), (1 << r) - 1);
        assert_eq!(ag(r).unwrap().len(), 1 << (r - 1));
        for c in 1..=r {
            assert_eq!(bose_burton(r, c).unwrap().len(), (1 << r) - (1 << (r - c)));
        }
        for k in (5..=r + 1).step_by(2) {
            let m = extremal_odd_girth(k, r).unwrap();
            assert_eq!(m.len(), k << (r + 1 - k), "k={k} r={r}");
        }
        for n in 2..=r.saturating_sub(2) {
            let m = extremal_gs(n, r).unwrap();
            assert_eq!(Ratio::from_integer(m.len() as i64), gs_size(n, r), "n={n} r={r}");
        }
    }
    for k in (3..=9).step_by(2) {
        let m = circuit(k).unwrap();
        assert_eq!((m.len(), m.ambient_rank()), (k, k - 1));
    }
}

#[test]
fn epsilon_identity_is_exact() {
    for n in 2..=6u32 {
        let one = Ratio::from_integer(1i64);
        let lhs = one - Ratio::new(1, 1 << (n - 1)) - Ratio::new(3, 1 << (n + 2));
        let rhs = one - Ratio::new(11, 1 << (n + 2));
        assert_eq!(lhs, rhs, "n={n}");
    }
}

#[test]
fn parameter_domains() {
    assert!(pg(0).is_err());
    assert!(ag(0).is_err());
    assert!(bose_burton(3, 4).is_err());
    assert!(bose_burton(3, 0).is_err());
    assert!(circuit(4).is_err());
    assert!(circuit(1).is_err());
    assert!(extremal_odd_girth(3, 4).is_err());
    assert!(extremal_odd_girth(7, 5).is_err());
    assert!(extremal_gs(1, 5).is_err());
    assert!(extremal_gs(3, 4).is_err());
    let msg = extremal_odd_girth(4, 6).unwrap_err().to_string();
    assert!(msg.contains("k must be odd and ≥ 5"), "{msg}");
}

#[test]
fn family_examples() {
    for r in 1..=6 {
        assert!(ag(r).unwrap().is_affine());
        assert!(is_isomorphic(&ag(r).unwrap(), &bose_burton(r, 1).unwrap()));
    }
    for (r, n) in [(4, 2), (5, 3), (6, 3)] {
        let expected = (1usize << r) - (1 << (r + 1 - n));
        assert_eq!(bose_burton(r, n - 1).unwrap().len(), expected);
    }
    for r in 2..=6 {
        for n in 2..=r {
            assert!(!bose_burton(r, n - 1).unwrap().has_pg_restriction(n).unwrap(), "r={r} n={n}");
        }
    }
    assert_eq!(bose_burton(5, 2).unwrap().critical_number_bruteforce(), 2);
    assert_eq!(circuit(7).unwrap().odd_girth(), OddGirth::Finite(7));
    for k in [3, 5, 7, 9] {
        assert!(!circuit(k).unwrap().is_affine());
    }
    let m = extremal_odd_girth(7, 7).unwrap();
    assert_eq!((m.len(), m.odd_girth()), (14, OddGirth::Finite(7)));
    assert!(!extremal_odd_girth(5, 5).unwrap().is_affine());
    assert!(!extremal_gs(3, 5).unwrap().has_pg_restriction(3).unwrap());
    assert_eq!(extremal_gs(4, 6).unwrap().critical_number().0, 4);
}

#[test]
fn extremal_families_have_their_defining_properties() {
    for r in 4..=8 {
        for k in (5..=r + 1).step_by(2) {
            let m = extremal_odd_girth(k, r).unwrap();
            assert!(m.is_full_rank());
            assert_eq!(m.odd_girth(), OddGirth::Finite(k));
        }
        for n in 2..=r - 2 {
            let m = extremal_gs(n, r).unwrap();
            assert!(m.is_full_rank());
            assert!(!m.has_pg_restriction(n).unwrap(), "n={n} r={r}");
            assert_eq!(m.critical_number().0, n, "n={n} r={r}");
        }
    }
}

#[test]
fn boundary_identities() {
    for k in [5, 7, 9] {
        assert_eq!(extremal_odd_girth(k, k - 1).unwrap(), circuit(k).unwrap());
    }
    for r in 4..=8 {
        assert_eq!(extremal_gs(2, r).unwrap(), extremal_odd_girth(5, r).unwrap());
    }
    for r in 1..=6 {
        assert_eq!(bose_burton(r, 1).unwrap(), ag(r).unwrap());
    }
}

#[test]
fn conical_lift_of_pg_is_pg() {
    for n in 1..=5 {
        let (m, _) = conical_lift(&pg(n).unwrap()).unwrap();
        assert!(is_isomorphic(&m, &pg(n + 1).unwrap()));
    }
}

#[test]
fn lifts_need_full_rank() {
    let m = BinaryMatroid::from_bits(3, [1, 2]).unwrap();
    assert!(conical_lift(&m).is_err());
    assert!(doubling(&m).is_err());
}

#[test]
fn apex_lines_are_complete() {
    let mut g = rng(21);
    for _ in 0..100 {
        let n = random_full_rank(&mut g, 5);
        let (m, apex) = conical_lift(&n).unwrap();
        for p in m.iter().filter(|&p| p != apex) {
            assert!(m.contains(p ^ apex));
        }
    }
}

/// The five clauses relating a full-rank `N` to its conical lift `M` with
/// apex `v` and to the doubling `M \ v`.
fn lift_clauses(n: &BinaryMatroid) -> Result<(), String> {
    let (m, apex) = conical_lift(n).map_err(|e| e.to_string())?;
    let d = doubling(n).map_err(|e| e.to_string())?;
    let r = m.ambient_rank();
    if m.len() != 2 * n.len() + 1 || d.len() != 2 * n.len() {
        return Err("sizes".into());
    }
    if d != m.delete(apex) {
        return Err("doubling is the lift minus the apex".into());
    }
    // the copy of N sits literally on the last-coordinate-zero hyperplane
    if !n.iter().all(|p| d.contains(binmat::Gf2Vector::new(p.bits() << 1))) {
        return Err("containment".into());
    }
    if d.critical_number().0 != n.critical_number().0 {
        return Err("critical number".into());
    }
    if d.odd_girth() != n.odd_girth() {
        return Err("odd girth".into());
    }
    for k in 1..r {
        let in_n = k <= n.ambient_rank() && n.has_pg_restriction(k).unwrap();
        if d.has_pg_restriction(k).unwrap() != in_n {
            return Err(format!("pg restriction of order {k}"));
        }
        if in_n && !m.has_pg_restriction(k + 1).unwrap() {
            return Err(format!("pg lift of order {k}"));
        }
    }
    Ok(())
}

#[test]
fn lift_and_doubling_clauses_on_random_matroids() {
    let mut g = rng(22);
    for i in 0..1000 {
        let n = random_full_rank(&mut g, 5);
        if let Err(clause) = lift_clauses(&n) {
            panic!("sample {i}: {clause} fails for {n:?}");
        }
    }
}

#[test]
fn lift_clauses_on_families() {
    for (name, n) in common::families(5) {
        if n.is_full_rank() {
            lift_clauses(&n).unwrap_or_else(|c| panic!("{name}: {c}"));
        }
    }
}

#[test]
fn family_spec_parsing() {
    assert_eq!("extremal_odd_girth".parse::<Family>().unwrap(), Family::ExtremalOddGirth);
    assert_eq!("extremal-gs".parse::<Family>().unwrap(), Family::ExtremalGs);
    assert!("cube".parse::<Family>().is_err());
    let spec = FamilySpec::from_params(
        Family::Bb,
        FamilyParams {
            r: Some(5),
            c: Some(2),
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(spec.build().unwrap().len(), 24);
    let missing = FamilySpec::from_params(Family::Bb, FamilyParams { r: Some(5), ..Default::default() });
    assert!(missing.unwrap_err().to_string().contains("--c"));
}

#[test]
fn ag_is_a_hyperplane_complement() {
    for r in 1..=6 {
        let f = binmat::Gf2Vector::unit(1, r);
        let h = binmat::hyperplane_complement(f, r).unwrap();
        assert_eq!(ag(r).unwrap().points(), &h);
    }
}
