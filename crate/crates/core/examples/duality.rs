//! Materialize the small quantum group at l = 3 and dualize it.
use homq::catalog::enveloping;
use homq::findim::materialize;

fn main() {
    let u = enveloping::small(3, Some("lambda"), 4).unwrap();
    let b = materialize(&u.h, &u.r).unwrap();
    println!("dim {}", b.dim());
    println!("braided: {}", b.verify_braided().unwrap().summary());

    let d = b.dualize();
    println!("dual cobraided: {}", d.verify_cobraided().unwrap().summary());
    println!("double dual is the original: {}", d.dualize() == b);
}
