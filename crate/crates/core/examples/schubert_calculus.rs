//! Schubert polynomials, their dual basis, structure constants and chain
//! polynomials for S_3.

use std::sync::Arc;

use gt_core::coxeter::{CoxeterGroup, RootSystem};
use gt_core::polyring::Shape;
use gt_core::rational;
use gt_core::schubert::SchubertCalculus;

fn main() -> gt_core::Result<()> {
    let group = Arc::new(CoxeterGroup::new(RootSystem::type_a(&Shape::new(&[3])))?);
    let calc = SchubertCalculus::new(group.clone())?;
    for w in group.elements() {
        println!("{:<8} S = {}", group.word_string(w), calc.schubert_poly(w));
        println!("{:<8} P = {}", "", calc.ps_poly(w));
    }
    let (s1, s2) = (group.parse_word("s1")?, group.parse_word("s2")?);
    for (rho, c) in calc.lr_expansion(s1, s2) {
        println!("S_s1 * S_s2 contains {} * S_{}", rational::to_string(c), group.word_string(*rho));
    }
    let w0 = group.longest();
    println!("P_(e, w0) = {}", calc.ps_chain_poly(group.identity(), w0)?);
    Ok(())
}
