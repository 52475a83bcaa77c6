// scratch: instrument buchberger hot spots
use bifactor::encode::{build_column_system, FactoringInstance};
use bifactor::groebner::{buchberger, GroebnerBudget};
use bifactor::preprocess::{cutoff_basis, CutoffConfig};
use std::time::Instant;

fn main() {
    let inst = FactoringInstance::new(899, 4, 4).unwrap();
    let sys = build_column_system(&inst);
    println!("system vars: {}", sys.registry.len());
    for cutoff in [2u32, 3, 4, 5, 6] {
        let cfg = CutoffConfig {
            cutoff,
            second_cutoff: None,
            budget: GroebnerBudget { max_basis: 100_000, max_pairs: 2_000_000, max_millis: 30_000 },
        };
        let t0 = Instant::now();
        match cutoff_basis(&sys, &cfg) {
            Ok(b) => println!("cutoff {cutoff}: basis {} in {:?}", b.len(), t0.elapsed()),
            Err(e) => println!("cutoff {cutoff}: {e} ({:?})", t0.elapsed()),
        }
    }
    let _ = buchberger;
}
