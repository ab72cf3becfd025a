use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hbound_core::algebra::{rat, MultiPoly, PrimeField, Rationals};
use hbound_core::parse::{parse_poly, parse_rational};

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn random_poly(rng: &mut ChaCha8Rng, vars: &[&str], max_den: i64) -> MultiPoly<Rationals> {
    let terms: Vec<_> = (0..rng.gen_range(0..=6))
        .map(|_| {
            let e: Vec<u32> = vars.iter().map(|_| if rng.gen_bool(0.5) { 0 } else { rng.gen_range(1..=5) }).collect();
            (e, rat(rng.gen_range(-30..=30), rng.gen_range(1..=max_den)))
        })
        .collect();
    MultiPoly::from_terms(Rationals, names(vars), terms)
}

#[test]
fn display_then_parse_is_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let var_sets: [&[&str]; 3] = [&["x", "y", "t"], &["t"], &["u", "v", "w1"]];
    for i in 0..100 {
        let vars = var_sets[i % 3];
        let p = random_poly(&mut rng, vars, 7);
        let text = p.to_string();
        let back = parse_rational(&text, vars).unwrap_or_else(|e| panic!("`{text}`: {e}"));
        assert_eq!(back, p, "round trip of `{text}`");
    }
}

#[test]
fn round_trip_over_prime_field() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f7 = PrimeField::new(7).unwrap();
    let vars = names(&["x", "y", "t"]);
    for _ in 0..30 {
        // Denominators stay invertible mod 7.
        let q = random_poly(&mut rng, &["x", "y", "t"], 6);
        let text = q.to_string();
        let p = parse_poly(&text, &vars, f7).unwrap().poly;
        let again = parse_poly(&p.to_string(), &vars, f7).unwrap().poly;
        assert_eq!(again, p);
    }
}
