fn main() {
    std::process::exit(frameqm::cli::run(std::env::args_os()));
}
