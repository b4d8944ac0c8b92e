//! Divided differences along every reduced word of the longest element of S_3.

use std::sync::Arc;

use gt_core::coxeter::{CoxeterGroup, RootSystem};
use gt_core::polyring::{parse_poly, Shape};
use gt_core::schubert::{divided_difference, divided_difference_word};

fn main() -> gt_core::Result<()> {
    let shape = Shape::new(&[3]);
    let group = Arc::new(CoxeterGroup::new(RootSystem::type_a(&shape))?);
    let f = parse_poly("x[1,1]^3*x[1,2] - 2*x[1,2]^2*x[1,3] + x[1,3]", &shape)?;
    let w0 = group.longest();
    println!("f = {f}");
    for word in group.reduced_words(w0) {
        let labels: Vec<String> = word.iter().map(|s| format!("s{}", s + 1)).collect();
        println!("along {:<10} {}", labels.join("*"), divided_difference_word(&group, &word, &f)?);
    }
    println!("canonical        {}", divided_difference(&group, w0, &f)?);
    Ok(())
}
