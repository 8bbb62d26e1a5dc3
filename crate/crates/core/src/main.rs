fn main() {
    std::process::exit(cychad::cli::run(std::env::args()));
}
