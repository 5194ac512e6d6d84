use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subres_core::oracle::{prs_general, subresultants_minors};
use subres_core::poly::ExactPoly;

fn random_poly(rng: &mut ChaCha8Rng, deg: usize, monic: bool, sparse: bool) -> ExactPoly {
    let mut c: Vec<BigInt> = (0..=deg)
        .map(|_| {
            if sparse && rng.gen_bool(0.5) {
                BigInt::from(0)
            } else {
                BigInt::from(rng.gen_range(-4i64..5))
            }
        })
        .collect();
    c[deg] = if monic { BigInt::from(1) } else { BigInt::from(rng.gen_range(1i64..4)) };
    ExactPoly::new(c)
}

#[test]
fn minors_and_sequence_agree_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut abnormal = 0;
    for trial in 0..600 {
        let da = rng.gen_range(1..=8);
        let db = rng.gen_range(1..=da);
        let sparse = trial % 2 == 0;
        let monic = trial % 3 != 0;
        let a = random_poly(&mut rng, da, monic, sparse);
        let b = random_poly(&mut rng, db, monic, sparse);
        let (t, set) = prs_general(&a, &b).unwrap();
        if t.delta.iter().skip(2).any(|&d| d > 1) || t.s.last().unwrap().degree() != Some(0) {
            abnormal += 1;
        }
        let m = subresultants_minors(&a, &b, da, db);
        assert_eq!(set, m, "A = {a}, B = {b}");
    }
    assert!(abnormal > 100, "only {abnormal} abnormal instances");
}
