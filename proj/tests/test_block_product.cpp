#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include "fpmm/driver.hpp"
#include "fpmm/oracle.hpp"
#include "fpmm/shadow.hpp"
#include "fpmm/matrix_io.hpp"
TEST_CASE("smoke") { CHECK(true); }
