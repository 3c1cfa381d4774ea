#include "flagfrob/acceptance.hpp"

#include <iostream>

int main()
{
    bool ok = true;
    for (const auto& r : flagfrob::acceptance::run_all(flagfrob::default_threads())) {
        std::cout << flagfrob::acceptance::format(r) << std::endl;
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
