fn main() {
    std::process::exit(revsurf::cli::run());
}
