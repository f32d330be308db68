use chk_core::cherednik::Claim;
use chk_core::params::*;
use chk_core::quivergeom::*;

fn failures(claims: &[Claim]) -> Vec<&Claim> {
    claims.iter().filter(|c| !c.passed()).collect()
}

#[test]
fn geometric_order_matches_theta_order() {
    for l in 2..=5 {
        for theta in alcove_representatives(l).unwrap() {
            let g = geom_order(&theta).unwrap();
            let eta = theta_order(&theta).unwrap();
            assert_eq!(&g.order, eta.order(), "θ = {:?}", theta.theta());
            assert_eq!(g.eta, eta.eta());
            assert!(g.chain_only);
            for i in 1..=l {
                assert_eq!(fixed_point_eta(&theta, i).unwrap(), fixed_point(&theta, eta.at(i)).unwrap());
                assert_eq!(curve_eta(&theta, i).unwrap(), curve(&theta, eta.at(i)).unwrap());
            }
        }
    }
}

#[test]
fn charts_and_degrees() {
    for l in 2..=5 {
        for theta in alcove_representatives(l).unwrap() {
            let r = charts(&theta).unwrap();
            assert!(failures(&r.claims).is_empty(), "{:?}", failures(&r.claims));
            let d = degree_claims(&theta).unwrap();
            assert!(failures(&d).is_empty(), "{:?}", failures(&d));
        }
    }
}

#[test]
fn sections_agree() {
    for l in 2..=4 {
        let cap = if l == 4 { (7, 7) } else { (9, 9) };
        for theta in alcove_representatives(l).unwrap() {
            let eta = theta_order(&theta).unwrap();
            for m in 1..=2 {
                for k in 0..l {
                    let w = theta.column_weight(m, k);
                    let r = sections(&w, &eta, cap).unwrap();
                    assert!(r.all_pass(), "θ = {:?} m = {m} k = {k}: {:?}", theta.theta(), failures(&r.claims));
                }
            }
        }
    }
}

#[test]
fn tautological_fibers() {
    for l in 2..=5 {
        for theta in alcove_representatives(l).unwrap() {
            for v in 0..l {
                let germs = taut_germs(&theta, v).unwrap();
                let p = fixed_point(&theta, v).unwrap();
                for (k, g) in germs.iter().enumerate() {
                    assert_eq!(g.gl_weight(), tau(l, k));
                    assert_eq!(g.value_at(&p.slots), PointValue::Unit);
                }
                assert_eq!(taut_fiber_qt(&theta, v).unwrap().specialize(), taut_fiber_closed(l, v));
            }
        }
    }
}

#[test]
fn abl_one_variable() {
    for l in 2..=3 {
        for theta in alcove_representatives(l).unwrap() {
            for m in 0..=3 {
                let r = abl_character(&theta, m, 15).unwrap();
                assert!(r.equal, "θ = {:?} m = {m}: {:?}", theta.theta(), failures(&r.claims));
            }
        }
    }
}

#[test]
fn abl_two_variables() {
    for l in 2..=3 {
        for theta in alcove_representatives(l).unwrap() {
            for m in 1..=2 {
                for k in 0..l {
                    let r = abl_two_variable(&theta, m, k, 12).unwrap();
                    assert!(failures(&r.claims).is_empty(), "θ = {:?} m = {m}: {:?}", theta.theta(), failures(&r.claims));
                }
            }
        }
    }
}

#[test]
fn cycles() {
    for l in 2..=5 {
        for theta in alcove_representatives(l).unwrap() {
            let r = ch_cycles(&theta).unwrap();
            assert!(failures(&r.claims).is_empty(), "{:?}", failures(&r.claims));
            for n in 1..=2 {
                let lambda = integer_regular_lambda(&theta, n);
                if !in_alcove_set(&lambda, &theta).unwrap() || !classify_lambda(&lambda).in_rreg {
                    continue;
                }
                for i in 1..=l {
                    if let Some(rec) = rch_simple(&lambda, &theta, i).unwrap() {
                        assert!(failures(&rec.claims).is_empty(), "{:?}", failures(&rec.claims));
                    }
                }
            }
        }
    }
}

#[test]
fn graded_main_check() {
    use chk_core::rational::frac;
    let cases = [
        (DeformParam::new(vec![frac(3, 4), frac(1, 4)]).unwrap(), 3, (8, 8)),
        (DeformParam::new(vec![frac(1, 2), frac(1, 3), frac(1, 6)]).unwrap(), 2, (5, 5)),
    ];
    for (lambda, top, cap) in cases {
        for theta in alcove_representatives(lambda.l()).unwrap() {
            if !in_alcove_set(&lambda, &theta).unwrap() {
                continue;
            }
            for m in 0..=top {
                let r = gr_main_check(&lambda, &theta, m, cap).unwrap();
                assert!(r.equal, "θ = {:?} m = {m}: {r:?}", theta.theta());
                assert!(r.columns.iter().all(|c| !c.dims.is_empty()));
            }
        }
    }
}
