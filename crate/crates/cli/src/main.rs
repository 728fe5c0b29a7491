fn main() {
    eprintln!("maclab: not yet wired up");
    std::process::exit(2);
}
