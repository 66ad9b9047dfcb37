//! Acceptance suite: every exit criterion runs here at its stated
//! tolerance (exact equality unless noted) and prints one line.
//!
//! Run with: cargo test --release --test acceptance -- --test-threads 1

use k3verify::catalog::BuiltCatalog;
use k3verify::curvegeom::elimination::singular_points;
use k3verify::curvegeom::germs::{
    delta_cusp_germ, delta_cusp_oracle, generic_change, germ_intersection_multiplicity, GermClass,
};
use k3verify::curvegeom::{family, general_position, Classification, PlaneCurve};
use k3verify::cyclo::{parse_cyclo, CycloNum};
use k3verify::invariants::{
    invariant_basis, molien_dimension, reynolds, trace_on_graded, trace_on_graded_by_monomials,
    Character,
};
use k3verify::linalg::Matrix;
use k3verify::matgroup::{Ambient, MatrixGroup, PointP};
use k3verify::polyring::{Grading, Monomial, MultiPoly};
use k3verify::scenario::built_catalog;
use k3verify::surfledger;

fn cy(s: &str) -> CycloNum {
    parse_cyclo(s, 1).unwrap()
}

fn cat() -> &'static BuiltCatalog {
    built_catalog().expect("catalog builds")
}

fn criterion(number: u32, name: &str, body: impl FnOnce() -> Result<String, String>) {
    match body() {
        Ok(detail) => println!("ACCEPTANCE {number:02} {name}: PASS ({detail})"),
        Err(e) => {
            println!("ACCEPTANCE {number:02} {name}: FAIL ({e})");
            panic!("criterion {number} failed: {e}");
        }
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(label: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{label}: got {got:?}, want {want:?}"))
    }
}

#[test]
fn criterion_01_group_orders() {
    criterion(1, "group-orders", || {
        let cat = cat();
        expect("l27", cat.group("l27").unwrap().order(), 168)?;
        expect("m9", cat.group("m9").unwrap().order(), 72)?;
        expect("n72", cat.group("n72").unwrap().order(), 72)?;
        expect("t48", cat.group("t48").unwrap().order(), 48)?;
        expect("c3c7", cat.group("c3c7").unwrap().order(), 21)?;
        expect("h_d16", cat.group("h_d16").unwrap().order(), 16)?;
        let val = cat.group("valentiner").unwrap();
        expect("valentiner linear", val.linear_order(), 1080)?;
        expect("valentiner projective", val.order(), 360)?;
        Ok("168/72/72/48/21/16 and 1080|360".into())
    });
}

#[test]
fn criterion_02_sqrt_minus_seven() {
    criterion(2, "sqrt-minus-seven", || {
        let s = parse_cyclo("z7 + z7^2 + z7^4 - z7^3 - z7^5 - z7^6", 1).map_err(|e| e.to_string())?;
        let sq = s.mul(&s);
        expect("square", sq, CycloNum::from_int(-7))?;
        Ok("square is exactly -7".into())
    });
}

#[test]
fn criterion_03_molien_dimensions() {
    criterion(3, "molien-dimensions", || {
        let cat = cat();
        let c3c7 = cat.group("c3c7").unwrap();
        expect(
            "c3c7 degree 6",
            molien_dimension(c3c7, Grading::Total(6), &Character::trivial(c3c7))
                .map_err(|e| e.to_string())?,
            2,
        )?;
        let val = cat.group("valentiner").unwrap();
        expect(
            "valentiner degree 6",
            molien_dimension(val, Grading::Total(6), &Character::trivial(val))
                .map_err(|e| e.to_string())?,
            1,
        )?;
        let h = cat.group("h_d16").unwrap();
        let bi = Grading::Bi {
            split: 2,
            a: 4,
            b: 4,
        };
        expect(
            "dihedral bidegree (4,4)",
            molien_dimension(h, bi, &Character::trivial(h)).map_err(|e| e.to_string())?,
            3,
        )?;
        Ok("2 / 1 / 3".into())
    });
}

#[test]
fn criterion_04_invariant_bases() {
    criterion(4, "invariant-bases", || {
        let cat = cat();
        let c3c7 = cat.group("c3c7").unwrap();
        let space = invariant_basis(c3c7, Grading::Total(6), &Character::trivial(c3c7))
            .map_err(|e| e.to_string())?;
        let p1 = cat.curve("p1").unwrap().clone();
        let p2 = cat.curve("p2").unwrap().clone();
        if !space.spans_same_as(&[p1, p2]).map_err(|e| e.to_string())? {
            return Err("order-21 invariants do not span the printed sextics".into());
        }
        let h = cat.group("h_d16").unwrap();
        let bi = Grading::Bi {
            split: 2,
            a: 4,
            b: 4,
        };
        let space = invariant_basis(h, bi, &Character::trivial(h)).map_err(|e| e.to_string())?;
        let fs: Vec<MultiPoly> = ["d16_f1", "d16_f2", "d16_f3"]
            .iter()
            .map(|n| cat.curve(n).unwrap().clone())
            .collect();
        if !space.spans_same_as(&fs).map_err(|e| e.to_string())? {
            return Err("dihedral invariants do not span the printed forms".into());
        }
        let spec = cat.specs.group_spec("m9").unwrap();
        let gens: Vec<_> = spec
            .generators
            .iter()
            .filter(|(n, _)| n == "a" || n == "b")
            .cloned()
            .collect();
        let nine = MatrixGroup::generate("nine", Ambient::P2, gens, 100).map_err(|e| e.to_string())?;
        let space = invariant_basis(&nine, Grading::Total(6), &Character::trivial(&nine))
            .map_err(|e| e.to_string())?;
        let fs: Vec<MultiPoly> = ["m9_f1", "m9_f2", "m9_f3", "m9_f4"]
            .iter()
            .map(|n| cat.curve(n).unwrap().clone())
            .collect();
        if !space.spans_same_as(&fs).map_err(|e| e.to_string())? {
            return Err("nine-group invariants do not span the four printed forms".into());
        }
        Ok("three bases match up to exact basis change".into())
    });
}

#[test]
fn criterion_05_klein_quartic() {
    criterion(5, "klein-quartic", || {
        let cat = cat();
        let klein = cat.curve("klein").unwrap();
        let curve = PlaneCurve::new(klein.clone()).map_err(|e| e.to_string())?;
        let locus = singular_points(&curve).map_err(|e| e.to_string())?;
        if !locus.is_smooth_certificate() {
            return Err("quartic not certified smooth".into());
        }
        let l27 = cat.group("l27").unwrap();
        let chi = l27
            .semi_invariance_character(klein)
            .map_err(|e| e.to_string())?
            .ok_or("quartic not semi-invariant")?;
        if !chi.iter().all(|v| v.is_one()) {
            return Err("quartic character nontrivial".into());
        }
        let hess = klein.hessian_det().map_err(|e| e.to_string())?;
        let target = cat.curve("hess_klein").unwrap();
        let scalar = hess
            .equal_up_to_scalar(target)
            .map_err(|e| e.to_string())?
            .ok_or("hessian not proportional to the printed sextic")?;
        Ok(format!(
            "smooth, invariant, hessian scalar {}",
            scalar.to_canonical_string()
        ))
    });
}

#[test]
fn criterion_06_c3c7_family() {
    criterion(6, "c3c7-family", || {
        let report = k3verify::scenario::run_scenario("c3c7-family").map_err(|e| e.to_string())?;
        for name in [
            "exactly-four-singular-members",
            "singular-member-points",
            "seven-points-general-position",
        ] {
            let check = report
                .checks
                .iter()
                .find(|c| c.name == name)
                .ok_or_else(|| format!("missing check {name}"))?;
            if !check.pass {
                return Err(format!("{name}: {}", check.actual));
            }
        }
        Ok("four singular members; seven orbit points in general position".into())
    });
}

#[test]
fn criterion_07_ledger_identities() {
    criterion(7, "ledger-identities", || {
        expect("cover plane", surfledger::euler_double_cover(3, &[-18]), 24)?;
        expect("cover quadric", surfledger::euler_double_cover(4, &[-16]), 24)?;
        expect(
            "reduction identity",
            surfledger::mori_constraint(Some(3), 0, 7, 3).map_err(|e| e.to_string())?,
            true,
        )?;
        expect("blowdown 8+4*7", surfledger::blowdown_selfint(8, &[2; 7]), 36)?;
        expect("blowdown 20+4*4", surfledger::blowdown_selfint(20, &[2; 4]), 36)?;
        let nikulin: Vec<u32> = (2..=8)
            .map(|o| surfledger::nikulin_fixed_points(o).unwrap())
            .collect();
        expect("nikulin", nikulin, vec![8, 6, 4, 4, 2, 3, 2])?;
        for p in [2u32, 3, 5, 7] {
            expect(
                "prime formula",
                surfledger::nikulin_fixed_points(p).unwrap(),
                24 / (p + 1),
            )?;
        }
        let lines: Vec<u32> = (1..=7)
            .map(|d| surfledger::delpezzo_line_count(d).unwrap())
            .collect();
        expect("lines", lines, vec![240, 56, 27, 16, 10, 6, 3])?;
        expect("h0 d3 r2", surfledger::h0_anticanonical(3, 2).unwrap(), 10)?;
        expect("h0 d1 r2", surfledger::h0_anticanonical(1, 2).unwrap(), 4)?;
        expect(
            "branch contribution 16",
            surfledger::branch_contribution(16, 2, -18),
            50,
        )?;
        expect(
            "branch contribution 8",
            surfledger::branch_contribution(8, 2, -18),
            34,
        )?;
        Ok("all integer identities hold".into())
    });
}

#[test]
fn criterion_08_lifting_criterion() {
    criterion(8, "lifting-criterion", || {
        let cat = cat();
        let m9 = cat.group("m9").unwrap();
        let i = m9.generator("i").ok_or("no generator i")?;
        let p = PointP::new(Ambient::P2, vec![cy("0"), cy("1"), cy("-1")]).unwrap();
        let det = i.linearization_det(&p).map_err(|e| e.to_string())?;
        if !det.is_one() {
            return Err(format!("determinant {}", det.to_canonical_string()));
        }
        let mukai = cat.curve("mukai_m9").unwrap();
        let value = mukai.evaluate(p.coords()).map_err(|e| e.to_string())?;
        if value.is_zero() {
            return Err("point unexpectedly on the branch sextic".into());
        }
        let fa = cat.curve("m9_fa_inv").unwrap();
        if !fa
            .evaluate(p.coords())
            .map_err(|e| e.to_string())?
            .is_zero()
        {
            return Err("family member does not pass through the point".into());
        }
        Ok(format!(
            "determinant 1; branch value {}; family member vanishes",
            value.to_canonical_string()
        ))
    });
}

#[test]
fn criterion_09_bidegree_family() {
    criterion(9, "bidegree-family", || {
        let cat = cat();
        let f1 = cat.curve("d16_f1").unwrap();
        let f2 = cat.curve("d16_f2").unwrap();
        let product = cat
            .curve("d16_zfactor")
            .unwrap()
            .mul(cat.curve("d16_wfactor").unwrap())
            .map_err(|e| e.to_string())?;
        expect(
            "factorization",
            f1.sub(f2).map_err(|e| e.to_string())?,
            product,
        )?;
        for s in ["1", "-1", "z4", "z8"] {
            if family::solve_singular_family(&cy(s))
                .map_err(|e| e.to_string())?
                .is_some()
            {
                return Err(format!("solvable at the eighth root {s}"));
            }
        }
        let curve = family::singular_family_curve(&cy("2"))
            .map_err(|e| e.to_string())?
            .ok_or("no solution at 2")?;
        let locus = singular_points(&curve).map_err(|e| e.to_string())?;
        if !locus.is_complete() || locus.points.len() != 8 {
            return Err(format!(
                "{} points, {} residuals",
                locus.points.len(),
                locus.residuals.len()
            ));
        }
        let h = cat.group("h_d16").unwrap();
        let p2 = PointP::new(
            Ambient::P1xP1,
            vec![cy("1"), cy("2"), cy("1"), cy("2")],
        )
        .unwrap();
        let orbit = h.orbit_point(&p2).map_err(|e| e.to_string())?;
        if orbit.len() != 8 || !locus.points.iter().all(|r| orbit.contains(&r.point)) {
            return Err("singular set is not the length-eight orbit".into());
        }
        if !locus
            .points
            .iter()
            .all(|r| r.classification == Classification::Node)
        {
            return Err("not all double points are nodes".into());
        }
        expect(
            "cusp locus degree",
            family::cusp_locus_degree().map_err(|e| e.to_string())?,
            24,
        )?;
        Ok("factorization, eighth-root fan, eight nodes, degree 24".into())
    });
}

#[test]
fn criterion_10_germ_tables() {
    criterion(10, "germ-tables", || {
        for m in 1..=5 {
            expect("delta", delta_cusp_germ(m), delta_cusp_oracle(m))?;
        }
        expect(
            "smooth pair",
            germ_intersection_multiplicity(
                GermClass::SmoothBranch(1),
                GermClass::SmoothBranch(1),
                &generic_change(),
            )
            .map_err(|e| e.to_string())?,
            1,
        )?;
        expect(
            "cusp pair",
            germ_intersection_multiplicity(
                GermClass::CuspType(2),
                GermClass::CuspType(3),
                &generic_change(),
            )
            .map_err(|e| e.to_string())?,
            6,
        )?;
        // Lower bound on pseudo-random invertible changes.
        let mut seed: u64 = 0x5eed_cafe;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        let mut tested = 0;
        while tested < 100 {
            let ch = [
                [CycloNum::from_int(next()), CycloNum::from_int(next())],
                [CycloNum::from_int(next()), CycloNum::from_int(next())],
            ];
            let det = ch[0][0]
                .mul(&ch[1][1])
                .sub(&ch[0][1].mul(&ch[1][0]));
            if det.is_zero() {
                continue;
            }
            tested += 1;
            for (g1, g2) in [
                (GermClass::CuspType(2), GermClass::CuspType(3)),
                (GermClass::CuspType(3), GermClass::CuspType(2)),
                (GermClass::CuspType(2), GermClass::CuspType(4)),
            ] {
                let m = germ_intersection_multiplicity(g1, g2, &ch)
                    .map_err(|e| e.to_string())?;
                let bound = (g1.multiplicity() as u64) * (g2.multiplicity() as u64);
                if m < bound {
                    return Err(format!("{g1:?} vs {g2:?}: {m} < {bound}"));
                }
            }
        }
        Ok("delta oracle, table entries, 100 randomized lower-bound cases".into())
    });
}

#[test]
fn criterion_11_property_suites() {
    criterion(11, "property-suites", || {
        let cat = cat();
        let mut seed: u64 = 0xabcdef12;
        let mut next = move |m: u64| {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (seed >> 33) % m
        };

        // Reynolds idempotence on random sextic combinations (order 21).
        let c3c7 = cat.group("c3c7").unwrap();
        let chi = Character::trivial(c3c7);
        let monos = k3verify::invariants::monomial_basis(3, Grading::Total(6));
        for _ in 0..100 {
            let mut terms = Vec::new();
            for _ in 0..3 {
                let m = monos[next(monos.len() as u64) as usize].clone();
                let coeff = CycloNum::from_int(next(9) as i64 - 4);
                terms.push((m, coeff));
            }
            let f = MultiPoly::new(3, Grading::Total(6), terms).map_err(|e| e.to_string())?;
            let once = reynolds(c3c7, &f, &chi).map_err(|e| e.to_string())?;
            let twice = reynolds(c3c7, &once, &chi).map_err(|e| e.to_string())?;
            if once != twice {
                return Err("reynolds not idempotent".into());
            }
        }

        // Euler identity on random homogeneous polynomials.
        for _ in 0..100 {
            let d = 2 + next(5) as u32;
            let basis = k3verify::invariants::monomial_basis(3, Grading::Total(d));
            let mut terms = Vec::new();
            for _ in 0..4 {
                let m = basis[next(basis.len() as u64) as usize].clone();
                terms.push((m, CycloNum::from_int(next(7) as i64 - 3)));
            }
            let f = MultiPoly::new(3, Grading::Total(d), terms).map_err(|e| e.to_string())?;
            let mut acc = MultiPoly::zero(3, Grading::Total(d));
            for i in 0..3 {
                let xi = MultiPoly::new(
                    3,
                    Grading::Total(1),
                    vec![(Monomial::var(3, i), CycloNum::one())],
                )
                .map_err(|e| e.to_string())?;
                acc = acc
                    .add(&xi.mul(&f.partial(i).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
            }
            if acc != f.scale(&CycloNum::from_int(d as i64)) {
                return Err("euler identity fails".into());
            }
        }

        // Left-action law on random elements of the order-48 group.
        let t48 = cat.group("t48").unwrap();
        let sextic = cat.curve("t48_sextic").unwrap();
        let elements = t48.elements();
        for _ in 0..100 {
            let g = &elements[next(elements.len() as u64) as usize];
            let h = &elements[next(elements.len() as u64) as usize];
            let lhs = g
                .act(&h.act(sextic).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let rhs = g.compose(h).act(sextic).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err("act is not a left action".into());
            }
        }

        // Orbit-stabilizer on random points under the order-21 group.
        let pool = ["0", "1", "-1", "z3", "z3^2", "z7"];
        let mut done = 0;
        while done < 100 {
            let coords: Vec<CycloNum> = (0..3).map(|_| cy(pool[next(6) as usize])).collect();
            if coords.iter().all(|c| c.is_zero()) {
                continue;
            }
            done += 1;
            let p = PointP::new(Ambient::P2, coords).map_err(|e| e.to_string())?;
            let orbit = c3c7.orbit_point(&p).map_err(|e| e.to_string())?;
            let stab = c3c7.stabilizer_order(&p).map_err(|e| e.to_string())?;
            if orbit.len() * stab != c3c7.order() {
                return Err("orbit-stabilizer fails".into());
            }
        }

        // Projective invariance of the singularity test and of general
        // position under random invertible changes.
        let c_sing = PlaneCurve::new(cat.curve("c_sing").unwrap().clone())
            .map_err(|e| e.to_string())?;
        let singular_point = PointP::new(Ambient::P2, vec![cy("1"), cy("1"), cy("1")]).unwrap();
        let smooth_point = PointP::new(Ambient::P2, vec![cy("1"), cy("0"), cy("0")]).unwrap();
        let sample_points = [
            PointP::new(Ambient::P2, vec![cy("1"), cy("0"), cy("0")]).unwrap(),
            PointP::new(Ambient::P2, vec![cy("0"), cy("1"), cy("0")]).unwrap(),
            PointP::new(Ambient::P2, vec![cy("0"), cy("0"), cy("1")]).unwrap(),
            PointP::new(Ambient::P2, vec![cy("1"), cy("1"), cy("1")]).unwrap(),
        ];
        let base_gp = general_position(&sample_points)
            .map_err(|e| e.to_string())?
            .ok;
        let mut done = 0;
        while done < 100 {
            // Random invertible matrix: unitriangular product keeps the
            // determinant 1.
            let e = |v: i64| CycloNum::from_int(v);
            let lower = Matrix::new(
                3,
                3,
                vec![
                    e(1),
                    e(0),
                    e(0),
                    e(next(5) as i64 - 2),
                    e(1),
                    e(0),
                    e(next(5) as i64 - 2),
                    e(next(5) as i64 - 2),
                    e(1),
                ],
            );
            let upper = Matrix::new(
                3,
                3,
                vec![
                    e(1),
                    e(next(5) as i64 - 2),
                    e(next(5) as i64 - 2),
                    e(0),
                    e(1),
                    e(next(5) as i64 - 2),
                    e(0),
                    e(0),
                    e(1),
                ],
            );
            let a = lower.mul(&upper);
            done += 1;
            // Transformed curve: f o a^{-1}; transformed point: a p.
            let map = k3verify::matgroup::ProjectiveMap::new(Ambient::P2, a.clone(), false)
                .map_err(|e| e.to_string())?;
            let moved = map.act(c_sing.poly()).map_err(|e| e.to_string())?;
            let moved_curve = PlaneCurve::new(moved).map_err(|e| e.to_string())?;
            for (p, expected) in [(&singular_point, true), (&smooth_point, false)] {
                let q = map.apply(p);
                let got = k3verify::curvegeom::is_singular_at(&moved_curve, &q)
                    .map_err(|e| e.to_string())?;
                if got != expected {
                    return Err("singularity not projectively invariant".into());
                }
            }
            let moved_points: Vec<PointP> = sample_points.iter().map(|p| map.apply(p)).collect();
            let gp = general_position(&moved_points)
                .map_err(|e| e.to_string())?
                .ok;
            if gp != base_gp {
                return Err("general position not projectively invariant".into());
            }
        }

        // Molien traces: eigenvalue route equals the monomial oracle.
        let h16 = cat.group("h_d16").unwrap();
        let bi = Grading::Bi {
            split: 2,
            a: 2,
            b: 2,
        };
        for g in h16.linear_elements().iter().take(20) {
            let fast = trace_on_graded(g, bi).map_err(|e| e.to_string())?;
            let slow = trace_on_graded_by_monomials(g, bi).map_err(|e| e.to_string())?;
            if fast != slow {
                return Err("trace routes disagree".into());
            }
        }

        // Determinism: identical reports (modulo timing) on a rerun.
        for name in ["ledgers", "germs-ch6", "klein-l27"] {
            let a = k3verify::scenario::run_scenario(name).map_err(|e| e.to_string())?;
            let b = k3verify::scenario::run_scenario(name).map_err(|e| e.to_string())?;
            let mut va: serde_json::Value =
                serde_json::from_str(&a.to_json()).map_err(|e| e.to_string())?;
            let mut vb: serde_json::Value =
                serde_json::from_str(&b.to_json()).map_err(|e| e.to_string())?;
            va["elapsed_ms"] = 0.into();
            vb["elapsed_ms"] = 0.into();
            if va != vb {
                return Err(format!("report for {name} not deterministic"));
            }
        }

        Ok("six property suites, 100 exact cases each".into())
    });
}

#[test]
fn criterion_all_scenarios_pass() {
    criterion(0, "scenario-registry", || {
        let mut lines = Vec::new();
        for name in k3verify::scenario::list_scenarios() {
            let report = k3verify::scenario::run_scenario(name).map_err(|e| e.to_string())?;
            if !report.passed() {
                return Err(format!("scenario {name} failed"));
            }
            lines.push(format!("{name}:{}", report.checks.len()));
        }
        Ok(lines.join(" "))
    });
}

#[test]
fn criterion_04b_valentiner_runtime_budget() {
    // The two flagged slow items stay within their stated budgets.
    criterion(12, "runtime-budgets", || {
        let cat = cat();
        let val = cat.group("valentiner").unwrap();
        let start = std::time::Instant::now();
        let dim = molien_dimension(val, Grading::Total(6), &Character::trivial(val))
            .map_err(|e| e.to_string())?;
        let molien_time = start.elapsed();
        expect("dimension", dim, 1)?;
        if molien_time.as_secs() > 60 {
            return Err(format!("trace averaging took {molien_time:?} > 60 s"));
        }
        let klein = PlaneCurve::new(cat.curve("klein").unwrap().clone())
            .map_err(|e| e.to_string())?;
        let start = std::time::Instant::now();
        let locus = singular_points(&klein).map_err(|e| e.to_string())?;
        let elim_time = start.elapsed();
        if !locus.is_smooth_certificate() {
            return Err("quartic not smooth".into());
        }
        if elim_time.as_secs() > 60 {
            return Err(format!("elimination took {elim_time:?} > 60 s"));
        }
        Ok(format!(
            "trace averaging {} ms, elimination {} ms",
            molien_time.as_millis(),
            elim_time.as_millis()
        ))
    });
}
