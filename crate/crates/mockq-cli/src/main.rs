fn main() {
    std::process::exit(mockq_cli::run());
}
