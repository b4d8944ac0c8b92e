//! The simplicity criterion and reachability probes for two small configs.

use gt_core::galois::{GaloisConfig, GtModule};
use gt_core::polyring::Point;

fn module(src: &str) -> gt_core::Result<GtModule> {
    let cfg = GaloisConfig::from_json(&serde_json::from_str(src).expect("valid JSON"))?;
    let seed = Point::zero(cfg.shape());
    GtModule::new(cfg, seed)
}

fn main() -> gt_core::Result<()> {
    let toy = module(include_str!("../configs/toy_mu2.json"))?;
    println!("toy: {:?}", toy.simplicity_check(2)?);
    let e = toy.group().identity();
    let s1 = toy.group().parse_word("s1")?;
    println!("toy reaches (2,-1; s1): {}", toy.reachability_probe((&[0, 0], e), (&[2, -1], s1), 12)?);
    println!("toy returns: {}", toy.reachability_probe((&[2, -1], s1), (&[0, 0], e), 12)?);

    let blocking = module(include_str!("../configs/blocking_mu1.json"))?;
    println!("blocking: {:?}", blocking.simplicity_check(2)?);
    let e = blocking.group().identity();
    println!("blocking reaches z = 2: {}", blocking.reachability_probe((&[0], e), (&[2], e), 12)?);
    Ok(())
}
