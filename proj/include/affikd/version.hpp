#ifndef AFFIKD_VERSION_HPP
#define AFFIKD_VERSION_HPP

#define AFFIKD_VERSION "0.1.0"

#endif
