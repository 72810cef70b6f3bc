#include <stdio.h>
#define MAX 100

void read_array(int a[], int n)
{
    int i;
    for (i = 0; i < n; i++) {
        printf("Element %d: ", i + 1);
        scanf("%d", &a[i]);
    }
}

void print_array(int a[], int n)
{
    int i;
    for (i = 0; i < n; i++)
        printf("%d ", a[i]);
    printf("\n");
}

void bubble_sort(int a[], int n, int descending)
{
    int i, j, tmp, swapped;
    for (i = 0; i < n - 1; i++) {
        swapped = 0;
        for (j = 0; j < n - 1 - i; j++) {
            if (descending ? a[j] < a[j + 1] : a[j] > a[j + 1]) {
                tmp = a[j];
                a[j] = a[j + 1];
                a[j + 1] = tmp;
                swapped = 1;
            }
        }
        if (!swapped)
            break;
    }
}

int main()
{
    int a[MAX], n, order;
    printf("Number of elements (1-%d): ", MAX);
    scanf("%d", &n);
    if (n < 1 || n > MAX) {
        printf("Invalid size\n");
        return 1;
    }
    read_array(a, n);
    printf("Sort order (0 ascending, 1 descending): ");
    scanf("%d", &order);
    printf("Before: ");
    print_array(a, n);
    bubble_sort(a, n, order);
    printf("After:  ");
    print_array(a, n);
    return 0;
}
