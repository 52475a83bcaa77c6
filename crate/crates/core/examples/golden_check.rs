// scratch: verify cell golden basis
use bifactor::groebner::{buchberger, GroebnerBudget};
use bifactor::poly::Polynomial;
use bifactor::order::TermOrder;
use bifactor::vars::Variable;

fn main() {
    let p = |t: &str| Polynomial::parse(t).unwrap();
    let names = ["Pj", "Qi", "S", "Sp", "Z", "Zp"];
    let vars: Vec<Variable> = names.iter().map(|n| Variable::named(n)).collect();
    let ord = TermOrder::plex(vars.clone());
    let h = p("Qi*Pj + S + Z - Sp - 2*Zp");
    let mut gens = vec![h.clone()];
    for n in names {
        gens.push(p(&format!("{n}^2 - {n}")));
    }
    let t0 = std::time::Instant::now();
    let gb = buchberger(&gens, &ord, &GroebnerBudget::default()).unwrap();
    println!("time: {:?}  size: {}", t0.elapsed(), gb.len());
    for g in &gb.generators {
        println!("  {}", g);
    }
}
