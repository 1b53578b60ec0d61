#include "commands.hpp"
#include "common.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    using namespace dunkl::cli;
    CLI::App app{"dunkl-lab: radial Dunkl processes of types A and B"};
    app.set_version_flag("--version", DUNKL_LAB_VERSION);
    app.require_subcommand(1);

    const Command commands[] = {register_simulate(app), register_fekete(app), register_verify(app),
                                register_intertwine(app)};

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    const std::vector<std::string> args(argv, argv + argc);
    for (const auto& c : commands) {
        if (!c.sub->parsed()) continue;
        try {
            return c.run(args);
        } catch (const UsageError& e) {
            std::cerr << "usage error: " << e.what() << '\n';
            return kUsage;
        } catch (const dunkl::DomainError& e) {
            std::cerr << "usage error: " << e.what() << '\n';
            return kUsage;
        } catch (const dunkl::NumericError& e) {
            std::cerr << "numeric failure: " << e.what() << '\n';
            return kNumeric;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kNumeric;
        }
    }
    return kUsage;
}
