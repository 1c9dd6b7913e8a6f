/* The public header must stay compilable as plain C. */
#include "rtri.h"

int rtri_header_compiles_as_c(void) {
    return RTRI_OK + (int)sizeof(rtri_field*);
}
