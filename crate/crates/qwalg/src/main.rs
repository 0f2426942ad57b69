fn main() {
    std::process::exit(qwalg::cli::run(std::env::args_os()));
}
