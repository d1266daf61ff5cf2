/* The public header must compile as C and the library must link from C. */
#include <stdio.h>
#include <string.h>

#include "gridcount/gridcount.h"

int main(void)
{
    gc_table* table = NULL;
    gc_int128 f;
    char text[48];

    if (gc_table_create(10, 0, &table) != GC_OK)
        return 1;
    if (gc_f_fast(table, 3, 1, &f) != GC_OK)
        return 2;
    if (gc_int128_format(f, text, sizeof text) != GC_OK || strcmp(text, "56") != 0)
        return 3;
    if (gc_f_fast(table, 100, 1, &f) != GC_ERR_PRECONDITION)
        return 4;
    gc_table_destroy(table);
    printf("c header ok\n");
    return 0;
}
