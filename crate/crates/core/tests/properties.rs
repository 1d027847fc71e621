use std::f64::consts::PI;

use isocartan_core::cartan::{self, Tolerances};
use isocartan_core::fixtures::{FixtureSpec, RootTube};
use isocartan_core::focal::{self, BlockRadii, Interval};
use isocartan_core::model::{self, AmbientKind, CurvatureBlock, HypersurfaceModel};
use isocartan_core::rootsys::{self, lookup};
use isocartan_core::{Complex64 as Cx, Error, Rational};
use proptest::prelude::*;

const SPACES: [&str; 8] = [
    "G2^2/SO(4)",
    "SL(4,R)/SO(4)",
    "SO0(2,5)/SO(2)xSO(5)",
    "SU(2,5)/S(U(2)xU(5))",
    "Sp(3,R)/U(3)",
    "F4^4/Sp(3)Sp(1)",
    "E6^6/Sp(4)",
    "SO(8,C)/SO(8)",
];

fn proper_block() -> impl Strategy<Value = CurvatureBlock> {
    (0.2f64..3.0, -3.5f64..3.5, 1u32..6)
        .prop_filter("proper", |(b, l, _)| (l.abs() - b).abs() > 0.05)
        .prop_map(|(b, l, m)| CurvatureBlock::new(l, -b * b, m))
}

fn noncompact_model() -> impl Strategy<Value = HypersurfaceModel> {
    prop::collection::vec(proper_block(), 1..5).prop_map(|bs| HypersurfaceModel::new("random", AmbientKind::Noncompact, bs))
}

fn compact_model() -> impl Strategy<Value = HypersurfaceModel> {
    prop::collection::vec((0.2f64..3.0, -3.5f64..3.5, 1u32..6), 1..5).prop_map(|bs| {
        let blocks = bs.into_iter().map(|(b, l, m)| CurvatureBlock::new(l, b * b, m)).collect();
        HypersurfaceModel::new("random", AmbientKind::Compact, blocks)
    })
}

fn windows() -> (Interval, Interval) {
    (Interval::left_open(0.0, 3.0), Interval::closed(-2.0 * PI, 2.0 * PI))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn projection_loses_no_root(space in 0usize..SPACES.len(), raw in prop::collection::vec(-5i128..=5, 8)) {
        let entry = lookup(SPACES[space]).unwrap();
        let v: Vec<Rational> = raw[..entry.roots.coordinate_dim()].iter().map(|&x| Rational::from_integer(x)).collect();
        match rootsys::project_roots(&entry.roots, &v) {
            Ok(p) => {
                let classes: u32 = p.classes.iter().map(|c| c.total_mult).sum();
                prop_assert_eq!(classes + p.kernel_mult, entry.roots.total_multiplicity());
                prop_assert_eq!(p.tangent_dim() as usize, entry.ambient_dim - 1);
                for w in p.classes.windows(2) {
                    prop_assert!(w[0].beta_sq < w[1].beta_sq);
                }
                let lhs = 2 * p.sharp_non_rank_one() + p.sharp_rank_one();
                let dp = entry.roots.sharp_positive();
                let dp1 = entry.roots.sharp_rank_one();
                prop_assert!(lhs <= 2 * (dp - dp1) + dp1);
            }
            Err(Error::ZeroVector) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn m_formula_branches(a in 0usize..50, b in 0usize..50, rank in 1usize..9) {
        let extra = if rank == 2 { 1 } else if rank >= 3 { 2 } else { 0 };
        prop_assert_eq!(rootsys::m_formula(a, b, rank), 2 * a + b + extra);
    }

    #[test]
    fn merge_is_idempotent(idx in prop::collection::vec((0usize..3, 1u32..4), 1..8)) {
        let pool = [CurvatureBlock::new(1.5, -1.0, 1), CurvatureBlock::new(0.2, -4.0, 1), CurvatureBlock::new(0.0, 0.0, 1)];
        let blocks = idx.iter().map(|&(i, m)| CurvatureBlock { mult: m, ..pool[i] }).collect();
        let m = HypersurfaceModel::new("dups", AmbientKind::Noncompact, blocks);
        let once = model::validate(&m).merged;
        let twice = model::validate(&once).merged;
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(once.dim(), m.dim());
    }

    #[test]
    fn properness_ignores_order_and_mults(m in noncompact_model(), bad in any::<bool>(), seed in any::<u64>(), mult in 1u32..9) {
        let mut blocks = m.blocks.clone();
        if bad {
            blocks.push(CurvatureBlock::new(-2.0, -4.0, 1));
        }
        let base = model::is_proper(&HypersurfaceModel::new("a", AmbientKind::Noncompact, blocks.clone()), 1e-9).unwrap().proper;
        prop_assert_eq!(base, !bad);
        let k = (seed as usize) % blocks.len();
        blocks.rotate_left(k);
        blocks.reverse();
        for b in &mut blocks {
            b.mult = mult;
        }
        let shuffled = model::is_proper(&HypersurfaceModel::new("b", AmbientKind::Noncompact, blocks), 1e-9).unwrap().proper;
        prop_assert_eq!(base, shuffled);
    }

    #[test]
    fn solver_radii_are_zeros_and_membership_is_exact(m in noncompact_model()) {
        let (re, im) = windows();
        let Ok(set) = focal::focal_radii_complex(&m, re, im, 1e-9) else { return Ok(()); };
        for r in &set.radii {
            for (i, b) in m.blocks.iter().enumerate() {
                let listed = r.focal_blocks.contains(&i);
                if listed {
                    prop_assert!(focal::jacobi_coeff(r.value, b.lambda, b.mu).norm() < 1e-9);
                }
                prop_assert_eq!(focal::is_focal_block(b, r.value, 1e-7).unwrap(), listed, "block {} at {}", i, r.value);
            }
            let mult: u32 = r.focal_blocks.iter().map(|&i| m.blocks[i].mult).sum();
            prop_assert_eq!(mult, r.multiplicity);
        }
    }

    #[test]
    fn compact_membership_is_exact(m in compact_model()) {
        let set = focal::focal_radii_real(&m, Interval::left_open(0.0, 40.0), 1e-9).unwrap();
        for r in &set.radii {
            for (i, b) in m.blocks.iter().enumerate() {
                prop_assert_eq!(focal::is_focal_block(b, r.value, 1e-7).unwrap(), r.focal_blocks.contains(&i));
            }
        }
    }

    #[test]
    fn block_radii_are_periodic(b in proper_block()) {
        let m = HypersurfaceModel::new("one", AmbientKind::Noncompact, vec![b]);
        let set = focal::focal_radii_complex(&m, Interval::closed(-10.0, 10.0), Interval::closed(-20.0, 20.0), 1e-12).unwrap();
        let step = PI / (-b.mu).sqrt();
        for w in set.radii.windows(2) {
            prop_assert!((w[0].value.re - w[1].value.re).abs() < 1e-12);
            prop_assert!((w[1].value.im - w[0].value.im - step).abs() < 1e-9);
        }
        let cm = HypersurfaceModel::new("one", AmbientKind::Compact, vec![CurvatureBlock::new(b.lambda, -b.mu, 1)]);
        let set = focal::focal_radii_real(&cm, Interval::closed(-10.0, 10.0), 1e-12).unwrap();
        for w in set.radii.windows(2) {
            prop_assert!((w[1].value.re - w[0].value.re - step).abs() < 1e-9);
        }
    }

    #[test]
    fn radius_sets_are_conjugation_symmetric(m in noncompact_model(), h in 0.5f64..9.0) {
        let Ok(set) = focal::focal_radii_complex(&m, Interval::left_open(0.0, 3.0), Interval::closed(-h, h), 1e-9) else {
            return Ok(());
        };
        for r in &set.radii {
            prop_assert!(set.radii.iter().any(|q| (q.value - r.value.conj()).norm() < 1e-9 && q.focal_blocks == r.focal_blocks));
        }
    }

    #[test]
    fn tau_hat_on_the_real_axis(z in 0.05f64..4.0, s in -9.0f64..-1e-3) {
        let t = focal::tau_hat(Cx::new(z, 0.0), s).unwrap();
        let w = (-s).sqrt();
        prop_assert_eq!(t.im, 0.0);
        prop_assert!((t.re - w / (z * w).tanh()).abs() <= 1e-12 * t.re.abs().max(1.0));
    }

    #[test]
    fn tau_hat_rotates_into_tau(r in 0.05f64..3.0, b in 0.1f64..3.0) {
        prop_assume!((r * b / PI - (r * b / PI).round()).abs() > 1e-3);
        let lhs = focal::tau_hat(Cx::new(0.0, r), -b * b).unwrap();
        let rhs = focal::tau(r, b * b).unwrap();
        prop_assert!((lhs - Cx::new(0.0, -rhs)).norm() <= 1e-9 * rhs.abs().max(1.0));
    }

    #[test]
    fn kappa_path_matches_direct_sum(m in noncompact_model()) {
        let (re, im) = windows();
        let Ok(set) = focal::focal_radii_complex(&m, re, im, 1e-9) else { return Ok(()); };
        let tol = Tolerances::default();
        for r in &set.radii {
            let rep = cartan::cartan_sum(&m, r.value, &tol).unwrap();
            let scale: f64 = 1.0 + rep.terms.iter().map(|t| t.weight.norm() * t.mult as f64).sum::<f64>();
            let via = cartan::total_via_kappa(&m, r.value, &tol).unwrap();
            prop_assert!((via - rep.total).norm() <= 1e-12 * scale, "{} vs {}", via, rep.total);
        }
    }

    #[test]
    fn kappa_path_matches_direct_sum_compact(m in compact_model()) {
        let tol = Tolerances::default();
        let set = focal::focal_radii_real(&m, Interval::left_open(0.0, 40.0), 1e-9).unwrap();
        for r in &set.radii {
            let Ok(rep) = cartan::cartan_sum(&m, r.value, &tol) else { continue; };
            let scale: f64 = 1.0 + rep.terms.iter().map(|t| t.weight.norm() * t.mult as f64).sum::<f64>();
            let via = cartan::total_via_kappa(&m, r.value, &tol).unwrap();
            prop_assert!((via - rep.total).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn flat_radius_sum_reduces_to_space_form_sum(ls in prop::collection::vec((-4.0f64..4.0, 1u32..5), 1..5), pick in any::<prop::sample::Index>()) {
        let blocks: Vec<CurvatureBlock> = ls.iter().map(|&(l, m)| CurvatureBlock::new(l, 0.0, m)).collect();
        let l0 = blocks[pick.index(blocks.len())].lambda;
        prop_assume!(l0.abs() > 1e-3);
        let m = HypersurfaceModel::new("flat", AmbientKind::SpaceForm(0.0), blocks);
        let tol = Tolerances::default();
        let a = cartan::cartan_sum(&m, Cx::new(1.0 / l0, 0.0), &tol).unwrap();
        let b = cartan::cartan_sum_spaceform(&m, l0, &tol).unwrap();
        prop_assert!((a.total - b.total).norm() <= 1e-12 * (1.0 + b.total.norm()));
    }

    #[test]
    fn re_c_closed_form_matches_direct(m in noncompact_model()) {
        let (re, im) = windows();
        let Ok(set) = focal::focal_radii_complex(&m, re, im, 1e-9) else { return Ok(()); };
        let r0 = set.radii.iter().max_by(|a, b| a.value.re.total_cmp(&b.value.re)).unwrap();
        for (i, b) in m.blocks.iter().enumerate() {
            if r0.focal_blocks.contains(&i) {
                continue;
            }
            let Ok(c) = cartan::c_value(b.lambda, b.mu, r0.value, 1e-7) else { continue; };
            let r_re = match focal::block_radii(b) {
                BlockRadii::ImagLattice { re, .. } => re,
                other => panic!("{other:?}"),
            };
            prop_assert!(c.re <= 1e-9 || r_re > r0.value.re + 1e-9);
            let closed = cartan::re_c_closed_form(b.lambda, b.mu, Cx::new(r_re, 0.0), r0.value).unwrap();
            prop_assert!((closed - c.re).abs() <= 1e-9 * c.re.abs().max(1.0), "{} vs {}", closed, c.re);
        }
    }

    #[test]
    fn tube_flow_moves_the_focal_radius(kind in 0usize..4, s0 in 0.2f64..2.0, frac in 0.01f64..0.99) {
        let tube = match kind {
            0 => RootTube::a2(s0),
            1 => RootTube::b2(s0),
            2 => RootTube::g2(s0),
            _ => RootTube::g2_short_wall(s0),
        }.unwrap();
        let m = FixtureSpec::RootDataTube(tube).build().unwrap();
        let tol = Tolerances::default();
        let rep = cartan::check_theorem_d(&m, &tol);
        prop_assert!(rep.part_b);
        let s = frac * s0;
        let flowed = cartan::tube_flow(&m, s0, s, 1e-9).unwrap();
        let set = focal::focal_radii_complex(&flowed, Interval::left_open(0.0, 10.0), Interval::closed(0.0, 0.0), 1e-9).unwrap();
        prop_assert_eq!(set.radii.len(), 1);
        prop_assert!((set.radii[0].value.re - (s0 - s)).abs() < 1e-9);
    }
}
