fn main() {
    std::process::exit(steiner_cli::run());
}
