// suites.cpp — placeholder, implemented in a later pass.
