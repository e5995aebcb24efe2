//! Acceptance suite: one test per criterion, each sweeping its stated
//! family exactly and asserting both correctness (exact integer
//! arithmetic, zero tolerance) and the runtime budget. Criteria run
//! serially behind a gate so the timings are meaningful; run with
//! `--nocapture` to see one line per criterion.

use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;

use superschur::alternant::euler_e;
use superschur::dets;
use superschur::genfun;
use superschur::monomial::Monomial;
use superschur::rings::{self, PresentationKind, Window};
use superschur::rng::SplitMix64;
use superschur::series::SeqProvider;
use superschur::verify;
use superschur::{LaurentPoly, RingContext, Sector, Var};

static GATE: Mutex<()> = Mutex::new(());

fn criterion(number: u32, name: &str, limit_secs: f64, body: impl FnOnce()) {
    let _guard = GATE.lock().unwrap_or_else(|poisoned| poisoned.into_inner());
    let started = Instant::now();
    body();
    let elapsed = started.elapsed().as_secs_f64();
    let ok = elapsed < limit_secs;
    println!(
        "criterion {:02} {}: {} ({:.2}s, limit {:.0}s)",
        number,
        name,
        if ok { "PASS" } else { "FAIL" },
        elapsed,
        limit_secs
    );
    assert!(
        ok,
        "criterion {} exceeded its runtime budget: {:.2}s >= {:.0}s",
        number, elapsed, limit_secs
    );
}

#[test]
fn criterion_01_generator_consistency() {
    criterion(1, "generator consistency", 5.0, || {
        for m in 1..=3usize {
            let ctx = RingContext::laurent(m, 0);
            let sub = RingContext::laurent(m - 1, 0);
            let x1 = LaurentPoly::var(m, 0, Var::X(0));
            for k in -6..=6i64 {
                let h = genfun::complete_h(k, &ctx);
                let h_inf = genfun::h_infinity(k, &ctx);
                let big = genfun::big_h(k, &ctx);

                // three-case collapse
                let expected = if k >= 0 {
                    h.clone()
                } else if k > -(m as i64) {
                    LaurentPoly::zero(m, 0)
                } else {
                    -&h_inf
                };
                assert_eq!(big, expected, "case split at m={} k={}", m, k);
                assert_eq!(big, &h - &h_inf, "difference form at m={} k={}", m, k);

                // stripping recurrence against the smaller context
                let lhs = &big - &(&x1 * &genfun::big_h(k - 1, &ctx));
                let rhs = genfun::big_h(k, &sub).relabel(m, 0, 1, 0);
                assert_eq!(lhs, rhs, "recurrence at m={} k={}", m, k);
                if m == 1 {
                    assert!(lhs.is_zero(), "m=1 collapse at k={}", k);
                }
            }
        }
    });
}

#[test]
fn criterion_02_jacobi_trudi() {
    criterion(2, "jacobi-trudi determinants", 30.0, || {
        let mut rng = SplitMix64::new(0xACCE97);
        for m in 1..=3usize {
            let ctx = RingContext::laurent(m, 0);
            let big_h = genfun::big_h_seq(&ctx);
            for _ in 0..100 {
                let lambda = rng.non_increasing(m, -4, 4);
                let det = dets::jacobi_trudi_with(&lambda, m, &big_h).unwrap();
                let character = euler_e(&lambda, &ctx).unwrap();
                assert_eq!(det, character, "m={} lambda={:?}", m, lambda);
            }
        }
    });
}

#[test]
fn criterion_03_vanishing() {
    criterion(3, "vanishing determinants", 60.0, || {
        for (m, n) in [(1usize, 0usize), (2, 0), (1, 1), (2, 1), (2, 2)] {
            let ctx = RingContext::laurent(m, n);
            let report = rings::verify_vanishing_relations(&ctx, &Window::new(3, 6)).unwrap();
            assert!(report.passed(), "({},{}): {:?}", m, n, report.failures);
            assert!(report.instances_checked > 0);
        }
    });
}

#[test]
fn criterion_04_super_expansion() {
    criterion(4, "super expansion identities", 60.0, || {
        let mut rng = SplitMix64::new(0x50BE5);
        for m in 1..=3usize {
            for n in 0..=2usize {
                let ctx = RingContext::laurent(m, n);
                // expansion over x-generators, alternant identity,
                // stripping recurrence, case split: |k| <= 5
                let report = verify::generators(&ctx, &Window::new(5, 8)).unwrap();
                assert!(report.passed(), "({},{}): {:?}", m, n, report.failures);

                // det(H_{lambda_i - i + j}) = prod(1 - y_j/x_i) s_lambda(x)
                // for 50 random partitions
                let big_h = genfun::big_h_seq(&ctx);
                let product = {
                    let one = LaurentPoly::one(m, n);
                    let mut acc = one.clone();
                    for i in 0..m {
                        for j in 0..n {
                            let mut mono = Monomial::unit(m, n);
                            mono.x[i] = -1;
                            mono.y[j] = 1;
                            acc = &acc * &(&one - &LaurentPoly::from_monomial(mono, BigInt::one()));
                        }
                    }
                    acc
                };
                for _ in 0..50 {
                    let lambda = rng.partition(m, 4);
                    let det = dets::jacobi_trudi_with(&lambda, m, &big_h).unwrap();
                    let schur = genfun::schur_s(&lambda, Sector::X, &ctx).unwrap();
                    assert_eq!(det, &product * &schur, "({},{}) lambda {:?}", m, n, lambda);
                }
            }
        }
    });
}

#[test]
fn criterion_05_composite_schur() {
    criterion(5, "composite determinants and duals", 30.0, || {
        for m in 1..=4usize {
            let ctx = RingContext::laurent(m, 0);
            let report = verify::composite(&ctx, &Window::default()).unwrap();
            assert!(report.passed(), "m={}: {:?}", m, report.failures);
        }
    });
}

#[test]
fn criterion_06_series_duality() {
    criterion(6, "series pair duality", 30.0, || {
        let report = verify::duality(50, 0xD0A117).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert!(report.instances_checked > 50);
    });
}

#[test]
fn criterion_07_minor_sum() {
    criterion(7, "minor-sum identity", 5.0, || {
        let report = verify::minor_sum(200, 0x31D045).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert!(report.instances_checked >= 200);
    });
}

#[test]
fn criterion_08_kac_characters() {
    criterion(8, "kac characters", 60.0, || {
        for (m, n) in [(1usize, 1usize), (2, 1), (2, 2)] {
            let ctx = RingContext::laurent(m, n);
            // entries in [-2, 2], no degree cut
            let report = verify::kac(&ctx, &Window::new(2, i64::MAX)).unwrap();
            assert!(report.passed(), "({},{}): {:?}", m, n, report.failures);
            assert!(report.instances_checked > 0);
        }
    });
}

#[test]
fn criterion_09_bases() {
    criterion(9, "basis families", 120.0, || {
        for (m, n) in [(2usize, 0usize), (1, 1), (2, 2)] {
            let ctx = RingContext::laurent(m, n);
            let report = verify::basis(&ctx, &Window::new(3, 5), 50, 0xBA515).unwrap();
            assert!(report.passed(), "({},{}): {:?}", m, n, report.failures);
        }
    });
}

#[test]
fn criterion_10_presentations() {
    criterion(10, "ring presentations", 120.0, || {
        for (m, n) in [(2usize, 0usize), (0, 2), (1, 1), (2, 1), (2, 2)] {
            for kind in [
                PresentationKind::UPlus,
                PresentationKind::U,
                PresentationKind::UPm,
            ] {
                let ctx = match kind {
                    PresentationKind::U => RingContext::polynomial(m, n),
                    PresentationKind::UPlus => RingContext::partial(m, n),
                    PresentationKind::UPm => RingContext::laurent(m, n),
                };
                let report = rings::verify_presentation(&ctx, kind, &Window::new(3, 6)).unwrap();
                assert!(
                    report.passed(),
                    "({},{}) {:?}: {:?}",
                    m,
                    n,
                    kind,
                    report.failures
                );
            }
        }
    });
}

#[test]
fn criterion_11_tensor_decomposition() {
    criterion(11, "tensor decomposition", 60.0, || {
        for (m, n) in [(1usize, 1usize), (1, 2), (2, 3)] {
            let report = rings::check_tensor_iso(m, n, &Window::new(3, 4)).unwrap();
            assert!(report.passed(), "({},{}): {:?}", m, n, report.failures);
            assert!(report.instances_checked > 0);
        }
    });
}

/// Cross-check kept alongside the numbered criteria: the two expansions
/// of the generating function agree wherever both are defined, via an
/// independent descending recursion for the expansion at infinity.
#[test]
fn infinity_expansion_cross_check() {
    criterion(0, "expansion-at-infinity cross-check", 30.0, || {
        for (m, n) in [(1usize, 0usize), (2, 1), (2, 2), (0, 2)] {
            let ctx = RingContext::laurent(m, n);
            let pivot = ctx.superdim();
            // solve prod(1 - x_i t) * series = prod(1 - y_j t) downwards
            let p: Vec<LaurentPoly> = (0..=m as i64)
                .map(|i| {
                    let sign = if i % 2 == 0 {
                        BigInt::one()
                    } else {
                        -BigInt::one()
                    };
                    genfun::elementary_e(i, Sector::X, &ctx).scale(&sign)
                })
                .collect();
            let q: Vec<LaurentPoly> = (0..=n as i64)
                .map(|j| {
                    let sign = if j % 2 == 0 {
                        BigInt::one()
                    } else {
                        -BigInt::one()
                    };
                    genfun::elementary_e(j, Sector::Y, &ctx).scale(&sign)
                })
                .collect();
            let zero = LaurentPoly::zero(m, n);
            let mut coeffs: std::collections::BTreeMap<i64, LaurentPoly> = Default::default();
            for k in ((pivot - 6)..=pivot).rev() {
                let d = k + m as i64;
                let mut rhs = if (0..=n as i64).contains(&d) {
                    q[d as usize].clone()
                } else {
                    zero.clone()
                };
                for i in 0..m as i64 {
                    let prev = coeffs.get(&(k + m as i64 - i)).unwrap_or(&zero);
                    rhs = &rhs - &(&p[i as usize] * prev);
                }
                let c = if m == 0 {
                    rhs
                } else {
                    rhs.exact_div(&p[m]).unwrap()
                };
                coeffs.insert(k, c);
            }
            for k in (pivot - 6)..=pivot {
                assert_eq!(
                    genfun::h_infinity(k, &ctx),
                    coeffs[&k],
                    "({},{}) k={}",
                    m,
                    n,
                    k
                );
            }
        }
    });
}

/// The sequence providers respect the shared boundary conventions.
#[test]
fn provider_conventions() {
    criterion(0, "sequence provider conventions", 10.0, || {
        let ctx = RingContext::laurent(2, 1);
        let h = genfun::complete_h_seq(&ctx);
        let hstar = genfun::h_star_seq(&ctx);
        let e = genfun::elementary_seq(&ctx, Sector::X);
        for seq in [&h, &hstar, &e] {
            assert!(seq.at(0).is_one());
            assert!(seq.at(-1).is_zero());
            assert!(seq.at(-5).is_zero());
        }
    });
}
