//! Seed-fixed randomized verification of the algebra against its
//! independent oracles and the matrix backend.

use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gadj_core::blade::{blade_product, sign_oracle};
use gadj_core::{cartan, Blade, Multivector64, MAX_GENERATORS};

const MAX_VERIFY_GENERATORS: u32 = 12;
const MAX_HOMOMORPHISM_GENERATORS: u32 = 8;

struct Check {
    name: &'static str,
    passed: u64,
    failed: u64,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            passed: 0,
            failed: 0,
        }
    }

    fn record(&mut self, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }
}

fn random_blade_pair(rng: &mut ChaCha8Rng, max_m: u32) -> (Blade, Blade) {
    let m = rng.gen_range(1..=max_m);
    (
        Blade::new(rng.gen_range(0..1u64 << m), m).unwrap(),
        Blade::new(rng.gen_range(0..1u64 << m), m).unwrap(),
    )
}

fn random_multivector(rng: &mut ChaCha8Rng, m: u32, max_terms: usize) -> Multivector64 {
    Multivector64::from_terms(
        m,
        (0..rng.gen_range(0..=max_terms)).map(|_| {
            (
                rng.gen_range(0..1u64 << m),
                rng.gen_range(-4i64..=4) as f64,
            )
        }),
    )
    .unwrap()
}

pub fn cmd_verify(m: u32, trials: u64, seed: u64, inject_sign_flip: bool) -> ExitCode {
    if m == 0 || m > MAX_VERIFY_GENERATORS {
        eprintln!("error: --m must be in 1..={MAX_VERIFY_GENERATORS} (word-size cap is {MAX_GENERATORS})");
        return ExitCode::from(2);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    let mut c = Check::new("sign-oracle");
    for _ in 0..trials {
        let (a, b) = random_blade_pair(&mut rng, m);
        let got = blade_product(a, b).unwrap().sign;
        let mut want = sign_oracle(a, b).unwrap();
        if inject_sign_flip {
            want = -want;
        }
        c.record(got == want);
    }
    checks.push(c);

    let mut c = Check::new("associativity");
    for _ in 0..trials {
        let mm = rng.gen_range(1..=m);
        let a = Blade::new(rng.gen_range(0..1u64 << mm), mm).unwrap();
        let b = Blade::new(rng.gen_range(0..1u64 << mm), mm).unwrap();
        let d = Blade::new(rng.gen_range(0..1u64 << mm), mm).unwrap();
        let ab = blade_product(a, b).unwrap();
        let left = blade_product(ab.blade, d).unwrap();
        let bd = blade_product(b, d).unwrap();
        let right = blade_product(a, bd.blade).unwrap();
        c.record(left.blade == right.blade && ab.sign * left.sign == bd.sign * right.sign);
    }
    checks.push(c);

    let mut c = Check::new("anticommutation");
    for _ in 0..trials {
        let mm = rng.gen_range(1..=m);
        let i = rng.gen_range(1..=mm);
        let j = rng.gen_range(1..=mm);
        let ei = Blade::from_indices(&[i], mm).unwrap();
        let ej = Blade::from_indices(&[j], mm).unwrap();
        let ij = blade_product(ei, ej).unwrap();
        let ji = blade_product(ej, ei).unwrap();
        let ok = if i == j {
            ij.sign == 1 && ij.blade.mask() == 0
        } else {
            ij.blade == ji.blade && ij.sign == -ji.sign
        };
        c.record(ok);
    }
    checks.push(c);

    let mut c = Check::new("reverse-anti-automorphism");
    for _ in 0..trials {
        let mm = rng.gen_range(1..=m.min(10));
        let x = random_multivector(&mut rng, mm, 6);
        let y = random_multivector(&mut rng, mm, 6);
        let lhs = x.geometric_product(&y).unwrap().reverse();
        let rhs = y.reverse().geometric_product(&x.reverse()).unwrap();
        c.record(lhs == rhs);
    }
    checks.push(c);

    let hom_m = m.min(MAX_HOMOMORPHISM_GENERATORS);
    let mut c = Check::new("cartan-homomorphism");
    for _ in 0..trials {
        let (a, b) = random_blade_pair(&mut rng, hom_m);
        let kind = gadj_core::RepKind::CartanGeneral;
        let prod = blade_product(a, b).unwrap();
        let lhs = cartan::blade_matrix::<f64>(prod.blade, kind)
            .unwrap()
            .scale(prod.sign as f64);
        let rhs = cartan::blade_matrix::<f64>(a, kind)
            .unwrap()
            .mul(&cartan::blade_matrix(b, kind).unwrap());
        c.record(lhs.approx_eq(&rhs, 1e-9));
    }
    checks.push(c);

    let mut any_failed = false;
    for c in &checks {
        println!(
            "check {:<26} pass={} fail={}",
            c.name, c.passed, c.failed
        );
        any_failed |= c.failed > 0;
    }
    if any_failed {
        eprintln!("error: verification failures detected");
        ExitCode::from(1)
    } else {
        println!("all checks passed (m <= {m}, trials = {trials}, seed = {seed})");
        ExitCode::SUCCESS
    }
}
