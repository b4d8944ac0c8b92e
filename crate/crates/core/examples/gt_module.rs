//! A Gelfand-Tsetlin module over the μ = (1,2) Galois order: seeds, the
//! shift cone, and generator and Γ actions on basis vectors.

use gt_core::galois::{seed_normalize, GaloisConfig, GtModule, OperatorVector, Sign};
use gt_core::polyring::{parse_poly, Point};
use gt_core::rational::{self, frac, int};

fn main() -> gt_core::Result<()> {
    let cfg =
        GaloisConfig::from_json(&serde_json::from_str(include_str!("../configs/gl_mu12.json")).expect("valid JSON"))?;
    let raw = Point::new(cfg.shape(), vec![frac(1, 3), int(1), int(0)])?;
    let seed = seed_normalize(&raw, &cfg);
    println!("seed {} from {raw} with shift {:?}", seed.point, seed.shift);
    let module = GtModule::new(cfg, seed.point)?;
    let mut x = OperatorVector::basis(module.zero_shift(), module.group().identity());
    for (k, sign) in [(2, Sign::Plus), (1, Sign::Minus), (2, Sign::Minus)] {
        x = module.act_generator(k, sign, &x)?;
        println!("after X_{k}^{sign}: {}", module.vector_to_json(&x));
    }
    let gamma = parse_poly("x[2,1]^2 + x[2,2]^2", module.config().shape())?;
    println!("gamma: {}", module.vector_to_json(&module.act_gamma(&gamma, &x)?));
    for (key, part) in module.character_decompose(&x) {
        let coords: Vec<Vec<String>> = key.iter().map(|b| b.iter().map(rational::to_string).collect()).collect();
        println!("weight {coords:?}: {} terms", part.len());
    }
    Ok(())
}
