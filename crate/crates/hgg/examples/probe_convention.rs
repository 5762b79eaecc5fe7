use hgg::certify::{builtin_fixture, build_pipeline, BasisChoice};
use hgg::exactmat::{commutator, CommutatorConvention, RationalMatrix};
use hgg::rootgroups::in_second_highest_root_group;
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() {
    let cert = builtin_fixture("C-10").unwrap();
    let data = build_pipeline(&cert.alpha, &cert.beta, BasisChoice::Explicit(cert.basis.as_ref().unwrap())).unwrap();
    let a = data.gen_a.clone();
    let b = data.gen_b.clone();
    let c = data.gen_c.clone();
    let q1 = b.mul(&a.inverse().unwrap());
    let (l1, l2) = (&data.lambdas[0], &data.lambdas[1]);
    let target = BigRational::from_integer(BigInt::from(-198));

    let b2 = b.mul(&b);
    for conv in [CommutatorConvention::XyXinvYinv, CommutatorConvention::XinvYinvXy] {
        for w1_swap in [false, true] {
            let w1 = if w1_swap { commutator(&b2, &a, conv).unwrap() } else { commutator(&a, &b2, conv).unwrap() };
            for t_swap in [false, true] {
                let t = if t_swap { a.mul(&b2) } else { b2.mul(&a) };
                for m in [-3i64, 3] {
                    let tm = t.power(m).unwrap();
                    for w2_order in 0..2 {
                        let w2 = match w2_order {
                            0 => c.inverse().unwrap().mul(&tm).mul(&q1),
                            _ => q1.mul(&tm).mul(&c.inverse().unwrap()),
                        };
                        for w3_swap in [false, true] {
                            let w3 = if w3_swap { w2.mul(&c) } else { c.mul(&w2) };
                            for w4_swap in [false, true] {
                                let w4 = if w4_swap { commutator(&w3, &w1, conv).unwrap() } else { commutator(&w1, &w3, conv).unwrap() };
                                for w5_swap in [false, true] {
                                    let w5 = if w5_swap { commutator(&w2, &w4, conv).unwrap() } else { commutator(&w4, &w2, conv).unwrap() };
                                    for dir in [1i64, -1] {
                                        let step = w3.power(dir).unwrap();
                                        let mut p = RationalMatrix::identity(6);
                                        for k in 0..=300i64 {
                                            let kk = k * dir;
                                            if p.max_entry_bits() > 192 { break; }
                                            for (qi, q2) in [
                                                p.mul(&w5).mul(&c),          // (w3^k w5) c
                                                w5.mul(&p).mul(&c),          // (w5 w3^k) c
                                                c.mul(&p).mul(&w5),          // c (w3^k w5)
                                                c.mul(&w5).mul(&p),          // c (w5 w3^k)
                                            ].iter().enumerate() {
                                                if let Some(x) = in_second_highest_root_group(q2, l1, l2) {
                                                    if x == target {
                                                        println!("HIT conv={conv} w1s={w1_swap} ts={t_swap} m={m} w2o={w2_order} w3s={w3_swap} w4s={w4_swap} w5s={w5_swap} k={kk} form#{qi} x={x}");
                                                    }
                                                }
                                            }
                                            if k < 300 { p = p.mul(&step); }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    println!("sweep done");
}
