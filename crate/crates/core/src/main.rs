fn main() {
    std::process::exit(qflow::cli::run(std::env::args_os()));
}
