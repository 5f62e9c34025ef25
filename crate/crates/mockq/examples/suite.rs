fn main() {
    for r in mockq::catalog::identity_records() {
        let t = std::time::Instant::now();
        let rep = r.verify(r.default_truncation);
        println!("{:>8.2?} {rep}", t.elapsed());
    }
}
