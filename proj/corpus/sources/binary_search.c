#include <stdio.h>
#define MAX 100

void read_sorted(int a[], int n)
{
    int i;
    printf("Enter %d numbers in ascending order:\n", n);
    for (i = 0; i < n; i++) {
        scanf("%d", &a[i]);
        while (i > 0 && a[i] < a[i - 1]) {
            printf("Must not be smaller than %d, re-enter: ", a[i - 1]);
            scanf("%d", &a[i]);
        }
    }
}

int binary_search(int a[], int n, int key, int *steps)
{
    int low = 0, high = n - 1, mid;
    *steps = 0;
    while (low <= high) {
        mid = low + (high - low) / 2;
        (*steps)++;
        if (a[mid] == key)
            return mid;
        else if (a[mid] < key)
            low = mid + 1;
        else
            high = mid - 1;
    }
    return -1;
}

int main()
{
    int a[MAX], n, key, pos, steps, again = 1;
    printf("How many numbers? ");
    scanf("%d", &n);
    if (n < 1 || n > MAX) {
        printf("Invalid count\n");
        return 1;
    }
    read_sorted(a, n);
    while (again) {
        printf("Number to search: ");
        scanf("%d", &key);
        pos = binary_search(a, n, key, &steps);
        if (pos >= 0)
            printf("%d found at position %d after %d steps\n", key, pos + 1, steps);
        else
            printf("%d not found (%d steps)\n", key, steps);
        printf("Search again? (1/0): ");
        scanf("%d", &again);
    }
    return 0;
}
